#include "addramsey/cnf.hpp"

#include "addramsey/common.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace addramsey {

std::string Cnf::to_dimacs() const
{
    std::ostringstream out;
    out << "p cnf " << num_vars << ' ' << clauses.size() << '\n';
    for (const auto& clause : clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Cnf Cnf::parse_dimacs(std::string_view text)
{
    Cnf cnf;
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first == "c" || first[0] == 'c' || first == "%")
            continue;
        if (first == "p") {
            std::string fmt;
            if (!(ls >> fmt >> cnf.num_vars >> declared_clauses) || fmt != "cnf")
                throw std::invalid_argument("dimacs: malformed header");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw std::invalid_argument("dimacs: clause before header");
        std::istringstream cs(line);
        long lit = 0;
        while (cs >> lit) {
            if (lit == 0) {
                cnf.clauses.push_back(std::move(current));
                current.clear();
                continue;
            }
            if (std::labs(lit) > cnf.num_vars)
                throw std::invalid_argument("dimacs: literal out of range");
            current.push_back(static_cast<int>(lit));
        }
        if (!cs.eof())
            throw std::invalid_argument("dimacs: bad token in clause line");
    }
    if (!have_header)
        throw std::invalid_argument("dimacs: missing header");
    if (!current.empty())
        throw std::invalid_argument("dimacs: unterminated clause");
    if (cnf.clauses.size() != declared_clauses)
        throw std::invalid_argument("dimacs: clause count does not match header");
    return cnf;
}

const char* to_string(SatStatus status) noexcept
{
    switch (status) {
    case SatStatus::Satisfiable: return "sat";
    case SatStatus::Unsatisfiable: return "unsat";
    case SatStatus::Unknown: return "unknown";
    }
    return "unknown";
}

bool satisfies(const Cnf& cnf, const std::vector<bool>& model)
{
    for (const auto& clause : cnf.clauses) {
        bool ok = false;
        for (int lit : clause) {
            const auto v = static_cast<std::size_t>(std::abs(lit));
            if (v < model.size() && model[v] == (lit > 0)) {
                ok = true;
                break;
            }
        }
        if (!ok)
            return false;
    }
    return true;
}

namespace {

    // literal code: 2*var for x, 2*var+1 for !x
    constexpr int code(int lit) { return lit > 0 ? 2 * lit : 2 * -lit + 1; }
    constexpr int neg(int c) { return c ^ 1; }
    constexpr int var_of(int c) { return c >> 1; }

    class Dpll {
    public:
        Dpll(const Cnf& cnf, std::uint64_t budget)
            : nv_(cnf.num_vars), budget_(budget), value_(static_cast<std::size_t>(nv_) + 1, -1),
              watches_(2 * static_cast<std::size_t>(nv_) + 2)
        {
            for (const auto& clause : cnf.clauses) {
                std::vector<int> lits;
                for (int lit : clause)
                    lits.push_back(code(lit));
                clauses_.push_back(std::move(lits));
            }
        }

        SatResult run()
        {
            SatResult result;
            if (!setup()) {
                result.status = SatStatus::Unsatisfiable;
                return result;
            }
            result.status = search();
            result.nodes = budget_.used();
            if (result.status == SatStatus::Satisfiable) {
                result.model.assign(static_cast<std::size_t>(nv_) + 1, false);
                for (int v = 1; v <= nv_; ++v)
                    result.model[v] = value_[v] == 1;
            }
            return result;
        }

    private:
        struct Decision {
            int lit;
            std::size_t trail_pos;
            bool flipped;
        };

        int lit_value(int c) const
        {
            const int v = value_[var_of(c)];
            return v < 0 ? -1 : (v ^ (c & 1));
        }

        bool assign(int c)
        {
            const int cur = lit_value(c);
            if (cur == 1)
                return true;
            if (cur == 0)
                return false;
            value_[var_of(c)] = (c & 1) ? 0 : 1;
            trail_.push_back(c);
            return true;
        }

        bool setup()
        {
            for (std::size_t i = 0; i < clauses_.size(); ++i) {
                auto& cl = clauses_[i];
                if (cl.empty())
                    return false;
                if (cl.size() == 1) {
                    if (!assign(cl[0]))
                        return false;
                    continue;
                }
                watches_[cl[0]].push_back(i);
                watches_[cl[1]].push_back(i);
            }
            return propagate();
        }

        // Processes trail entries from head_; false on conflict.
        bool propagate()
        {
            while (head_ < trail_.size()) {
                const int falsified = neg(trail_[head_++]);
                auto& ws = watches_[falsified];
                std::size_t keep = 0;
                bool conflict = false;
                for (std::size_t w = 0; w < ws.size(); ++w) {
                    const std::size_t ci = ws[w];
                    if (conflict) {
                        ws[keep++] = ci;
                        continue;
                    }
                    auto& cl = clauses_[ci];
                    if (cl[0] == falsified)
                        std::swap(cl[0], cl[1]);
                    if (lit_value(cl[0]) == 1) {
                        ws[keep++] = ci;
                        continue;
                    }
                    bool moved = false;
                    for (std::size_t j = 2; j < cl.size(); ++j) {
                        if (lit_value(cl[j]) != 0) {
                            std::swap(cl[1], cl[j]);
                            watches_[cl[1]].push_back(ci);
                            moved = true;
                            break;
                        }
                    }
                    if (moved)
                        continue;
                    ws[keep++] = ci;
                    if (!assign(cl[0]))
                        conflict = true;
                }
                ws.resize(keep);
                if (conflict)
                    return false;
            }
            return true;
        }

        void undo_to(std::size_t pos)
        {
            while (trail_.size() > pos) {
                value_[var_of(trail_.back())] = -1;
                trail_.pop_back();
            }
            head_ = pos;
        }

        SatStatus search()
        {
            int next_var = 1;
            for (;;) {
                while (next_var <= nv_ && value_[next_var] >= 0)
                    ++next_var;
                if (next_var > nv_)
                    return SatStatus::Satisfiable;
                if (!budget_.charge())
                    return SatStatus::Unknown;
                decisions_.push_back({code(next_var), trail_.size(), false});
                assign(code(next_var));
                while (!propagate()) {
                    while (!decisions_.empty() && decisions_.back().flipped) {
                        undo_to(decisions_.back().trail_pos);
                        decisions_.pop_back();
                    }
                    if (decisions_.empty())
                        return SatStatus::Unsatisfiable;
                    if (!budget_.charge())
                        return SatStatus::Unknown;
                    auto& d = decisions_.back();
                    undo_to(d.trail_pos);
                    d.flipped = true;
                    assign(neg(d.lit));
                    next_var = 1;
                }
                next_var = 1;
            }
        }

        int nv_;
        NodeBudget budget_;
        std::vector<int> value_;
        std::vector<std::vector<int>> clauses_;
        std::vector<std::vector<std::size_t>> watches_;
        std::vector<int> trail_;
        std::size_t head_ = 0;
        std::vector<Decision> decisions_;
    };

} // namespace

SatResult solve_cnf(const Cnf& cnf, std::uint64_t budget)
{
    return Dpll(cnf, budget).run();
}

} // namespace addramsey
