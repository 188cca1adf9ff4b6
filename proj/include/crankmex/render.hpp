#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "crankmex/bijections.hpp"
#include "crankmex/partition.hpp"

namespace crankmex {

/// Exponent notation: (3,2,2,1,1,1,1) renders as "3 2^2 1^4", (8) as "8",
/// and the empty list as "-".
std::string render_parts(std::span<const int> parts);
inline std::string render_parts(const Partition& p) { return render_parts(std::span<const int>(p.parts())); }

/// Parses tokens like "3", "2^2"; plain part lists and exponent notation mix
/// freely. Throws std::invalid_argument on malformed input.
Partition parse_partition(const std::vector<std::string>& tokens);

/// One reduction state as "(<staircase>, <kappa>)", e.g. "(3 2 1, 2)".
std::string render_state(const TraceState& state);

/// The Table-1 middle column: split state plus one arrow per rule
/// application, e.g. "(3 2 1, 2) ->(ii)-> (1, 3 2^2)".
std::string render_reduction_inline(const BijectionTrace& trace);

/// Multi-line trace listing for map --trace output.
std::string render_trace(const BijectionTrace& trace);

enum class TableId { AB, BC, CD, All };

TableId parse_table_id(const std::string& id);

struct TableRow {
    int k = 0;
    std::vector<std::string> cells;
};

struct Table {
    TableId id = TableId::AB;
    int n = 0;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;  // sorted by k, enumeration order inside a block
};

/// Builds the requested correspondence table by enumerating the left column
/// class and applying the maps. Tables cd and all need n >= 2.
Table make_table(TableId id, int n);

std::string to_text(const Table& table);
std::string to_csv(const Table& table);
nlohmann::json to_json(const Table& table);

}  // namespace crankmex
