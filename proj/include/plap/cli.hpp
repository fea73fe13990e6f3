#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace plap::cli {

enum class Format { Csv, Json };

/// One cell of an output row.
using Cell = std::variant<double, long long, bool, std::string>;

/// A homogeneous block of rows with a fixed column order.
struct Table {
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add(std::vector<Cell> row);
};

/// Doubles are written with 17 significant digits so they round-trip exactly.
std::string format_number(double v);

void write_csv(const Table& t, std::ostream& out);
void write_json(const Table& t, std::ostream& out);
void write(const Table& t, Format f, std::ostream& out);

/// Entry point of the `plap` tool. `args` excludes the program name.
///
/// Exit codes: 0 success, 1 a verification or oracle check failed, 2 bad
/// arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Worker threads from PLAP_THREADS, else hardware concurrency.
unsigned thread_count();

}  // namespace plap::cli
