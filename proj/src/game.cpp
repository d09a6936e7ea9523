#include "sgalg/game.hpp"

#include <sstream>

#include "sgalg/error.hpp"

namespace sgalg {

std::string mode_name(Mode m) { return m == Mode::normalized ? "normalized" : "unnormalized"; }

Mode parse_mode(const std::string& name) {
    if (name == "normalized") return Mode::normalized;
    if (name == "unnormalized") return Mode::unnormalized;
    throw UsageError("unknown mode '" + name + "' (expected normalized or unnormalized)");
}

Rational StochasticGame::min_reward() const {
    Rational mn = rewards.at(0).a.at(0);
    for (const auto& R : rewards)
        for (const auto& v : R.a) mn = min(mn, v);
    return mn;
}

void StochasticGame::validate() const {
    if (states == 0 || rewards.size() != states || transitions.size() != states)
        throw ParseError("inconsistent state count");
    for (std::size_t s = 0; s < states; ++s) {
        const auto& R = rewards[s];
        if (R.rows < 1 || R.cols < 1) throw ParseError("state " + std::to_string(s + 1) + ": empty action set");
        if (transitions[s].size() != R.rows * R.cols)
            throw ParseError("state " + std::to_string(s + 1) + ": wrong number of transition rows");
        for (std::size_t a = 0; a < R.rows; ++a) {
            for (std::size_t b = 0; b < R.cols; ++b) {
                const auto& row = transitions[s][a * R.cols + b];
                if (row.size() != states)
                    throw ParseError("state " + std::to_string(s + 1) + ": transition row for actions (" +
                                     std::to_string(a + 1) + "," + std::to_string(b + 1) + ") has " +
                                     std::to_string(row.size()) + " entries, expected " + std::to_string(states));
                Rational sum(0);
                for (const auto& p : row) {
                    if (p.sign() < 0)
                        throw ParseError("negative transition probability " + p.str() + " at state " +
                                         std::to_string(s + 1) + ", actions (" + std::to_string(a + 1) + "," +
                                         std::to_string(b + 1) + ")");
                    sum += p;
                }
                if (sum != Rational(1))
                    throw ParseError("transitions sum to " + sum.str() + " != 1 at state " +
                                     std::to_string(s + 1) + ", actions (" + std::to_string(a + 1) + "," +
                                     std::to_string(b + 1) + ")");
            }
        }
    }
}

namespace {

struct LineReader {
    std::istringstream is;
    std::size_t lineno = 0;
    explicit LineReader(const std::string& text) : is(text) {}

    // next non-empty, non-comment line
    bool next(std::string& out) {
        std::string line;
        while (std::getline(is, line)) {
            ++lineno;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto begin = line.find_first_not_of(" \t\r");
            if (begin == std::string::npos) continue;
            auto end = line.find_last_not_of(" \t\r");
            out = line.substr(begin, end - begin + 1);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    }
};

std::vector<Rational> parse_row(const std::string& line, LineReader& reader) {
    std::istringstream ls(line);
    std::vector<Rational> row;
    std::string tok;
    while (ls >> tok) {
        try {
            row.push_back(Rational::parse(tok));
        } catch (const ParseError& e) {
            reader.fail(e.what());
        }
    }
    return row;
}

}  // namespace

StochasticGame parse_game(const std::string& text) {
    LineReader reader(text);
    std::string line;
    if (!reader.next(line)) throw ParseError("empty game file");
    std::size_t n = 0;
    if (line.rfind("states:", 0) == 0) {
        try {
            n = std::stoul(line.substr(7));
        } catch (const std::exception&) {
            reader.fail("bad state count in '" + line + "'");
        }
    } else {
        reader.fail("expected 'states: N', got '" + line + "'");
    }
    if (n == 0) reader.fail("state count must be positive");

    StochasticGame g;
    g.states = n;
    for (std::size_t s = 0; s < n; ++s) {
        if (!reader.next(line) || line != "state " + std::to_string(s + 1) + ":")
            reader.fail("expected 'state " + std::to_string(s + 1) + ":'");
        if (!reader.next(line) || line != "rewards:") reader.fail("expected 'rewards:'");

        std::vector<std::vector<Rational>> rows;
        bool saw_transitions = false;
        while (reader.next(line)) {
            if (line == "transitions:") {
                saw_transitions = true;
                break;
            }
            auto row = parse_row(line, reader);
            if (row.empty()) reader.fail("expected reward row");
            if (!rows.empty() && row.size() != rows.front().size())
                reader.fail("reward rows have inconsistent lengths");
            rows.push_back(std::move(row));
        }
        if (!saw_transitions) reader.fail("expected 'transitions:' after rewards");
        if (rows.empty()) reader.fail("state " + std::to_string(s + 1) + " has no reward rows");

        MatrixGame R(rows.size(), rows.front().size());
        for (std::size_t i = 0; i < R.rows; ++i)
            for (std::size_t j = 0; j < R.cols; ++j) R.at(i, j) = rows[i][j];

        std::vector<std::vector<Rational>> trans;
        for (std::size_t k = 0; k < R.rows * R.cols; ++k) {
            if (!reader.next(line))
                reader.fail("missing transition row " + std::to_string(k + 1) + " in state " +
                            std::to_string(s + 1));
            auto row = parse_row(line, reader);
            trans.push_back(std::move(row));
        }
        g.rewards.push_back(std::move(R));
        g.transitions.push_back(std::move(trans));
    }
    if (reader.next(line)) reader.fail("unexpected trailing content '" + line + "'");
    g.validate();
    return g;
}

std::string serialize_game(const StochasticGame& g) {
    std::ostringstream os;
    os << "states: " << g.states << "\n";
    for (std::size_t s = 0; s < g.states; ++s) {
        const auto& R = g.rewards[s];
        os << "state " << s + 1 << ":\n";
        os << "rewards:\n";
        for (std::size_t i = 0; i < R.rows; ++i) {
            for (std::size_t j = 0; j < R.cols; ++j) os << (j ? " " : "") << R.at(i, j).str();
            os << "\n";
        }
        os << "transitions:\n";
        for (std::size_t k = 0; k < R.rows * R.cols; ++k) {
            const auto& row = g.transitions[s][k];
            for (std::size_t t = 0; t < row.size(); ++t) os << (t ? " " : "") << row[t].str();
            os << "\n";
        }
    }
    return os.str();
}

std::pair<StochasticGame, ShiftRecord> shift_rewards(const StochasticGame& g) {
    Rational c = max(Rational(0), Rational(1) - g.min_reward());
    StochasticGame shifted = g;
    for (auto& R : shifted.rewards)
        for (auto& v : R.a) v += c;
    return {std::move(shifted), ShiftRecord{c}};
}

Rational unshift_value(const Rational& v, const Rational& c, Mode mode, const Rational& beta) {
    if (mode == Mode::normalized) return v - c;
    if (beta == Rational(1)) throw DomainError("unshift of unnormalized value at beta = 1");
    return v - c / (Rational(1) - beta);
}

void validate_distribution(const std::vector<Rational>& p) {
    Rational sum(0);
    for (const auto& v : p) {
        if (v.sign() < 0) throw DomainError("negative probability in strategy");
        sum += v;
    }
    if (sum != Rational(1)) throw DomainError("strategy does not sum to one");
}

}  // namespace sgalg
