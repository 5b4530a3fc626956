#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clex/clex_sequence.hpp"
#include "clex/dfa.hpp"
#include "clex/search.hpp"

namespace clex::nsp {

// Rostering instance: a nurses x days matrix of shift values. Boolean
// instances (shifts == 2) use 0 = off, 1 = working; shift instances
// (shifts == 4) use 0 = day, 1 = evening, 2 = night, 3 = off.
// demand[v][j] is the least number of nurses on value v at day j; Boolean
// instances carry one demand row (for value 1), shift instances three
// (for values 0, 1, 2).
struct NspInstance {
    int nurses = 0;
    int days = 0;
    int shifts = 2;
    std::vector<std::vector<int>> demand;

    bool is_boolean() const { return shifts == 2; }
    int demand_rows() const { return shifts == 2 ? 1 : 3; }
};

// Text format:
//   nurses days shifts
//   one line of `days` integers per demand row
// Errors carry the 1-based line number. Demands above `nurses` are
// rejected.
NspInstance parse_instance(std::istream& in);
NspInstance parse_instance_file(const std::string& path);
std::string format_instance(const NspInstance& inst);

struct GenParams {
    int nurses = 30;
    int days = 28;
    int shifts = 2;
    int demand_lo = 0;
    int demand_hi = 0;  // <= 0 means a default derived from nurses
};
// Deterministic: equal seeds and params give equal instances.
NspInstance generate_instance(std::uint64_t seed, const GenParams& p);

enum class Mode {
    kAmongLex,     // Boolean: window Amongs per row + plain lex between rows
    kSeqLex,       // Boolean: one DC Sequence per row + plain lex
    kClexSeq,      // Boolean: combined Sequence-and-lex per adjacent pair
    kRegularLex,   // shift: Regular per row + plain lex
    kClexRegular,  // shift: product-automaton Regular per adjacent pair
};
const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(std::string_view name);
bool mode_is_boolean(Mode m);

struct ModelConfig {
    Mode mode = Mode::kClexSeq;
    SequenceSpec seq;  // Boolean modes
    Dfa dfa;           // shift modes
};

struct BuiltModel {
    Model model;
    std::vector<int> vars;   // row-major: vars[r * days + c]
    std::vector<int> order;  // branching: last column first, bottom-up
};
// Throws std::invalid_argument when config and instance disagree.
BuiltModel build_model(const NspInstance& inst, const ModelConfig& cfg);

// Work-pattern presets for Boolean instances, as (l, u, k).
const std::vector<SequenceSpec>& boolean_seq_presets();
// Shift automaton forbidding night->day, night->evening and evening->day
// successions (a 12-hour rest between working shifts).
Dfa shift_dfa_rest12();
// Same plus: any run of equal consecutive values must be at least 2 long.
Dfa shift_dfa_rest12_min2();
std::optional<Dfa> shift_dfa_preset(std::string_view name);

struct BenchRow {
    std::string config;
    std::string instance;
    Outcome outcome = Outcome::kUnsat;
    long nodes = 0;
    long backtracks = 0;
    long ms = 0;
};
struct BenchOptions {
    std::chrono::milliseconds per_instance{10000};
};
// Runs every config on every instance; a per-instance timeout is recorded
// as an outcome, never aborts the batch.
std::vector<BenchRow> run_benchmark(
    const std::vector<std::pair<std::string, ModelConfig>>& configs,
    const std::vector<std::pair<std::string, NspInstance>>& instances,
    const BenchOptions& opt = {});
std::string format_csv(const std::vector<BenchRow>& rows);
std::string format_table(const std::vector<BenchRow>& rows);

// The n x 3 chain of rows [x, y, z] with y = x + z and adjacent rows
// ordered lexicographically; unsatisfiable by construction. `combined`
// posts the conjunction per adjacent pair, otherwise row sums and plain
// lex are posted separately. Branching is row by row, left to right.
BuiltModel build_separation_model(int n, bool combined);

// generate / solve / bench / compile-product / demo-separation.
// Exits 0 on success, 1 when solve proves no solution or hits its budget,
// 2 on usage or input errors.
int cli_main(int argc, char** argv);

}  // namespace clex::nsp
