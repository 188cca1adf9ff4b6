#include "crankmex/render.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace crankmex {

std::string render_parts(std::span<const int> parts) {
    if (parts.empty()) return "-";
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < parts.size()) {
        size_t run = i;
        while (run < parts.size() && parts[run] == parts[i]) ++run;
        if (!first) out << ' ';
        out << parts[i];
        if (run - i > 1) out << '^' << (run - i);
        first = false;
        i = run;
    }
    return out.str();
}

Partition parse_partition(const std::vector<std::string>& tokens) {
    if (tokens.empty()) throw std::invalid_argument("empty partition rejected");
    std::vector<int> parts;
    for (const auto& tok : tokens) {
        size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        std::string rep = caret == std::string::npos ? "1" : tok.substr(caret + 1);
        size_t pos = 0;
        int part = 0, count = 0;
        try {
            part = std::stoi(base, &pos);
            if (pos != base.size()) throw std::invalid_argument(tok);
            pos = 0;
            count = std::stoi(rep, &pos);
            if (pos != rep.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid part token: '" + tok + "'");
        }
        if (part < 1) throw std::invalid_argument("invalid part: parts must be positive");
        if (count < 1) throw std::invalid_argument("invalid part token: '" + tok + "'");
        if (count > 1'000'000) throw std::invalid_argument("repetition count too large in '" + tok + "'");
        parts.insert(parts.end(), static_cast<size_t>(count), part);
    }
    return Partition(std::move(parts));
}

namespace {

std::vector<int> staircase_parts(int j) {
    std::vector<int> s;
    for (int p = 2 * j + 1; p >= 1; --p) s.push_back(p);
    return s;
}

}  // namespace

std::string render_state(const TraceState& state) {
    if (!state.staircase_j) return render_parts(std::span<const int>(state.parts));
    auto stair = staircase_parts(*state.staircase_j);
    return "(" + render_parts(std::span<const int>(stair)) + ", " + render_parts(std::span<const int>(state.parts)) + ")";
}

std::string render_reduction_inline(const BijectionTrace& trace) {
    std::ostringstream out;
    bool first = true;
    for (const auto& step : trace.steps) {
        if (step.rule == Rule::Split) {
            out << render_state(step.state);
            first = false;
        } else if (step.rule == Rule::RuleI || step.rule == Rule::RuleII) {
            out << " ->(" << (step.rule == Rule::RuleI ? "i" : "ii") << ")-> " << render_state(step.state);
            first = false;
        }
    }
    if (first) out << "-";
    return out.str();
}

std::string render_trace(const BijectionTrace& trace) {
    std::ostringstream out;
    for (const auto& step : trace.steps)
        out << rule_name(step.rule) << ": " << render_state(step.state) << '\n';
    return out.str();
}

TableId parse_table_id(const std::string& id) {
    if (id == "ab") return TableId::AB;
    if (id == "bc") return TableId::BC;
    if (id == "cd") return TableId::CD;
    if (id == "all") return TableId::All;
    throw std::invalid_argument("unknown table id: '" + id + "' (expected ab, bc, cd, all)");
}

namespace {

std::string table_id_name(TableId id) {
    switch (id) {
        case TableId::AB: return "ab";
        case TableId::BC: return "bc";
        case TableId::CD: return "cd";
        case TableId::All: return "all";
    }
    return "?";
}

// The k block a row belongs to: beta for the X_e / M_<0 columns,
// class parameter minus one for F* / M_>0.
int block_of_left_column(TableId id, const Partition& left) {
    switch (id) {
        case TableId::AB:
        case TableId::All:
        case TableId::CD:
            return beta(left);
        case TableId::BC:
            return *class_param(std::span<const int>(left.parts()), ClassTag::Fstar) - 1;
    }
    return 0;
}

ClassTag left_column_tag(TableId id) {
    switch (id) {
        case TableId::AB:
        case TableId::All: return ClassTag::Xe;
        case TableId::BC: return ClassTag::Fstar;
        case TableId::CD: return ClassTag::MNeg;
    }
    return ClassTag::P;
}

}  // namespace

Table make_table(TableId id, int n) {
    if (n < 1) throw std::invalid_argument("invalid n: must be positive");
    if (n < 2 && (id == TableId::CD || id == TableId::All))
        throw std::invalid_argument("invalid n: positive-crank column needs n >= 2");

    Table table;
    table.id = id;
    table.n = n;
    std::string ns = std::to_string(n);
    std::string ps = std::to_string(n - 1);
    switch (id) {
        case TableId::AB:
            table.columns = {"X_e(" + ns + ",k)", "(1) x G_1(" + ps + ",k)", "F*(" + ns + ",k+1)"};
            break;
        case TableId::BC:
            table.columns = {"F*(" + ns + ",k+1)", "M_<0(" + ns + ",k)"};
            break;
        case TableId::CD:
            table.columns = {"M_<0(" + ns + ",k)", "M_>0(" + ns + ",k+1)"};
            break;
        case TableId::All:
            table.columns = {"X_e(" + ns + ",k)", "F*(" + ns + ",k+1)", "M_<0(" + ns + ",k)", "M_>0(" + ns + ",k+1)"};
            break;
    }

    ClassTag left_tag = left_column_tag(id);
    for (const Partition& left : enumerate_partitions(n)) {
        if (!member(left, {left_tag, std::nullopt})) continue;
        TableRow row;
        row.k = block_of_left_column(id, left);
        switch (id) {
            case TableId::AB: {
                auto [phi, trace] = even_mex_to_fixed_point(left);
                row.cells = {render_parts(left), render_reduction_inline(trace), render_parts(phi)};
                break;
            }
            case TableId::BC: {
                Partition kappa = fstar_to_negcrank(left);
                row.cells = {render_parts(left), render_parts(kappa)};
                break;
            }
            case TableId::CD: {
                Partition rho = neg_to_pos_crank(left);
                row.cells = {render_parts(left), render_parts(rho)};
                break;
            }
            case TableId::All: {
                auto [phi, trace] = even_mex_to_fixed_point(left);
                Partition kappa = fstar_to_negcrank(phi);
                Partition rho = neg_to_pos_crank(kappa);
                row.cells = {render_parts(left), render_parts(phi), render_parts(kappa), render_parts(rho)};
                break;
            }
        }
        table.rows.push_back(std::move(row));
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const TableRow& a, const TableRow& b) { return a.k < b.k; });
    return table;
}

std::string to_text(const Table& table) {
    std::ostringstream out;
    out << "k";
    for (const auto& col : table.columns) out << " | " << col;
    out << '\n';
    for (const auto& row : table.rows) {
        out << "k=" << row.k;
        for (const auto& cell : row.cells) out << " | " << cell;
        out << '\n';
    }
    return out.str();
}

std::string to_csv(const Table& table) {
    std::ostringstream out;
    out << "k";
    for (const auto& col : table.columns) out << ',' << '"' << col << '"';
    out << '\n';
    for (const auto& row : table.rows) {
        out << row.k;
        for (const auto& cell : row.cells) out << ',' << '"' << cell << '"';
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const Table& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows)
        rows.push_back({{"k", row.k}, {"cells", row.cells}});
    return nlohmann::json{
        {"table", table_id_name(table.id)},
        {"n", table.n},
        {"columns", table.columns},
        {"rows", rows},
    };
}

}  // namespace crankmex
