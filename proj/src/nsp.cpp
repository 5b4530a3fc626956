#include "clex/nsp.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "clex/basic.hpp"
#include "clex/clex_regular.hpp"
#include "clex/regular.hpp"
#include "clex/util.hpp"

namespace clex::nsp {

// ------------------------------------------------------------ instances

namespace {

[[noreturn]] void inst_fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "instance parse error at line " << line << ": " << what;
    throw std::runtime_error(os.str());
}

bool content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

NspInstance parse_instance(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!content_line(in, line, lineno))
        inst_fail(lineno + 1, "missing header");
    std::istringstream hs(line);
    NspInstance inst;
    if (!(hs >> inst.nurses >> inst.days >> inst.shifts))
        inst_fail(lineno, "expected 'nurses days shifts'");
    std::string extra;
    if (hs >> extra) inst_fail(lineno, "trailing tokens after header");
    if (inst.nurses < 1) inst_fail(lineno, "need at least one nurse");
    if (inst.days < 1) inst_fail(lineno, "need at least one day");
    if (inst.shifts != 2 && inst.shifts != 4)
        inst_fail(lineno,
                  "shifts must be 2 (boolean) or 4 (day/evening/night/off)");

    inst.demand.assign(inst.demand_rows(), std::vector<int>(inst.days, 0));
    for (int v = 0; v < inst.demand_rows(); ++v) {
        if (!content_line(in, line, lineno))
            inst_fail(lineno + 1, "missing demand row");
        std::istringstream ds(line);
        for (int j = 0; j < inst.days; ++j) {
            if (!(ds >> inst.demand[v][j]))
                inst_fail(lineno, "expected " + std::to_string(inst.days) +
                                      " demand values");
            if (inst.demand[v][j] < 0) inst_fail(lineno, "negative demand");
            if (inst.demand[v][j] > inst.nurses)
                inst_fail(lineno, "demand exceeds the number of nurses");
        }
        if (ds >> extra) inst_fail(lineno, "trailing tokens after demands");
    }
    if (content_line(in, line, lineno))
        inst_fail(lineno, "unexpected extra line");
    return inst;
}

NspInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string format_instance(const NspInstance& inst) {
    std::ostringstream os;
    os << inst.nurses << ' ' << inst.days << ' ' << inst.shifts << '\n';
    for (const auto& row : inst.demand) {
        for (int j = 0; j < static_cast<int>(row.size()); ++j)
            os << (j ? " " : "") << row[j];
        os << '\n';
    }
    return os.str();
}

NspInstance generate_instance(std::uint64_t seed, const GenParams& p) {
    if (p.nurses < 1 || p.days < 1)
        throw std::invalid_argument("generator: need nurses, days >= 1");
    if (p.shifts != 2 && p.shifts != 4)
        throw std::invalid_argument("generator: shifts must be 2 or 4");
    int hi = p.demand_hi;
    if (hi <= 0) hi = std::max(1, p.nurses / (p.shifts == 2 ? 3 : 4));
    const int lo = p.demand_lo;
    if (lo < 0 || lo > hi || hi > p.nurses)
        throw std::invalid_argument("generator: bad demand bounds");

    NspInstance inst;
    inst.nurses = p.nurses;
    inst.days = p.days;
    inst.shifts = p.shifts;
    inst.demand.assign(inst.demand_rows(), std::vector<int>(inst.days, 0));

    // Plain modulo keeps the draw identical across platforms.
    std::mt19937_64 rng(seed);
    auto draw = [&]() {
        return lo + static_cast<int>(
                        rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    if (inst.is_boolean()) {
        for (int j = 0; j < inst.days; ++j) inst.demand[0][j] = draw();
    } else {
        if (3 * lo > p.nurses)
            throw std::invalid_argument(
                "generator: demand floor exceeds nurse capacity");
        for (int j = 0; j < inst.days; ++j) {
            int d0, d1, d2;
            do {
                d0 = draw();
                d1 = draw();
                d2 = draw();
            } while (d0 + d1 + d2 > p.nurses);
            inst.demand[0][j] = d0;
            inst.demand[1][j] = d1;
            inst.demand[2][j] = d2;
        }
    }
    return inst;
}

// ----------------------------------------------------------------- modes

namespace {

constexpr std::array<std::pair<Mode, const char*>, 5> kModeNames{{
    {Mode::kAmongLex, "among-lex"},
    {Mode::kSeqLex, "seq-lex"},
    {Mode::kClexSeq, "clex-seq"},
    {Mode::kRegularLex, "regular-lex"},
    {Mode::kClexRegular, "clex-regular"},
}};

}  // namespace

const char* mode_name(Mode m) {
    for (const auto& [mode, name] : kModeNames)
        if (mode == m) return name;
    CLEX_ASSERT(false && "unknown mode");
    return "";
}

std::optional<Mode> mode_from_name(std::string_view name) {
    for (const auto& [mode, n] : kModeNames)
        if (name == n) return mode;
    return std::nullopt;
}

bool mode_is_boolean(Mode m) {
    return m == Mode::kAmongLex || m == Mode::kSeqLex || m == Mode::kClexSeq;
}

// ----------------------------------------------------------------- model

BuiltModel build_model(const NspInstance& inst, const ModelConfig& cfg) {
    const bool boolean = mode_is_boolean(cfg.mode);
    if (boolean != inst.is_boolean())
        throw std::invalid_argument(
            "model: mode and instance disagree on the shift kind");
    if (boolean) {
        cfg.seq.validate();
        if (cfg.seq.in_set != std::vector<Value>{1})
            throw std::invalid_argument(
                "model: boolean work patterns must count value 1");
    } else {
        if (cfg.dfa.num_states < 1)
            throw std::invalid_argument("model: shift modes need an automaton");
        for (Value v : cfg.dfa.alphabet())
            if (v < 0 || v >= inst.shifts)
                throw std::invalid_argument(
                    "model: automaton labels outside the shift values");
    }

    const int n = inst.nurses, days = inst.days;
    BuiltModel out;
    Model& m = out.model;
    out.vars.resize(static_cast<size_t>(n) * days);
    const Domain base = boolean ? Domain{0, 1} : Domain{0, 1, 2, 3};
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < days; ++c)
            out.vars[static_cast<size_t>(r) * days + c] = m.add_var(base);
    auto at = [&](int r, int c) {
        return out.vars[static_cast<size_t>(r) * days + c];
    };
    auto row = [&](int r) {
        std::vector<int> v(days);
        for (int c = 0; c < days; ++c) v[c] = at(r, c);
        return v;
    };
    auto col = [&](int c) {
        std::vector<int> v(n);
        for (int r = 0; r < n; ++r) v[r] = at(r, c);
        return v;
    };

    for (int c = 0; c < days; ++c) {
        for (int v = 0; v < inst.demand_rows(); ++v) {
            const Value counted = boolean ? 1 : v;
            if (inst.demand[v][c] > 0)
                post_at_least(m, col(c), {counted}, inst.demand[v][c]);
        }
    }

    switch (cfg.mode) {
        case Mode::kAmongLex:
            for (int r = 0; r < n; ++r)
                post_sequence_decomposed(m, row(r), cfg.seq.in_set, cfg.seq.l,
                                         cfg.seq.u, cfg.seq.k);
            for (int r = 0; r + 1 < n; ++r)
                post_lex_leq(m, row(r), row(r + 1));
            break;
        case Mode::kSeqLex: {
            const Dfa d = build_sequence_dfa(cfg.seq, {0, 1});
            for (int r = 0; r < n; ++r) post_regular(m, row(r), d);
            for (int r = 0; r + 1 < n; ++r)
                post_lex_leq(m, row(r), row(r + 1));
            break;
        }
        case Mode::kClexSeq:
            // Adjacent pairs cover every row's own pattern constraint.
            if (n == 1)
                post_regular(m, row(0), build_sequence_dfa(cfg.seq, {0, 1}));
            for (int r = 0; r + 1 < n; ++r)
                post_clex_sequence(m, row(r), row(r + 1), cfg.seq);
            break;
        case Mode::kRegularLex:
            for (int r = 0; r < n; ++r) post_regular(m, row(r), cfg.dfa);
            for (int r = 0; r + 1 < n; ++r)
                post_lex_leq(m, row(r), row(r + 1));
            break;
        case Mode::kClexRegular: {
            if (n == 1) post_regular(m, row(0), cfg.dfa);
            const Dfa prod = build_product_dfa(cfg.dfa, cfg.dfa);
            for (int r = 0; r + 1 < n; ++r) {
                std::vector<int> inter;
                inter.reserve(2 * days);
                for (int c = 0; c < days; ++c) {
                    inter.push_back(at(r, c));
                    inter.push_back(at(r + 1, c));
                }
                post_regular(m, std::move(inter), prod);
            }
            break;
        }
    }

    out.order.reserve(out.vars.size());
    for (int c = days - 1; c >= 0; --c)
        for (int r = n - 1; r >= 0; --r) out.order.push_back(at(r, c));
    return out;
}

// --------------------------------------------------------------- presets

const std::vector<SequenceSpec>& boolean_seq_presets() {
    static const std::vector<SequenceSpec> presets = [] {
        std::vector<SequenceSpec> out;
        for (auto [l, u, k] : std::vector<std::array<int, 3>>{{3, 4, 5},
                                                              {2, 3, 4},
                                                              {1, 2, 3},
                                                              {4, 5, 7},
                                                              {3, 4, 7},
                                                              {2, 3, 5}})
            out.push_back(SequenceSpec{l, u, k, {1}});
        return out;
    }();
    return presets;
}

Dfa shift_dfa_rest12() {
    // State 0 before the first day, state 1 + v after a day on value v.
    // An off day (3) restores the full choice; otherwise night (2) blocks
    // day (0) and evening (1), and evening blocks day.
    Dfa d = make_dfa(5, 0, {0, 1, 2, 3, 4});
    auto allowed = [](int last, Value v) {
        if (last == 2) return v != 0 && v != 1;
        if (last == 1) return v != 0;
        return true;
    };
    for (Value v = 0; v < 4; ++v) d.add_arc(0, v, 1 + v);
    for (int last = 0; last < 4; ++last)
        for (Value v = 0; v < 4; ++v)
            if (allowed(last, v)) d.add_arc(1 + last, v, 1 + v);
    return d;
}

Dfa shift_dfa_rest12_min2() {
    // States: 0 before the first day; 1 + 2v = one day into a run of v;
    // 2 + 2v = run of v at length >= 2. Runs may only end once they have
    // length two, and the succession rule of shift_dfa_rest12 applies.
    std::vector<int> finals{0};
    for (int v = 0; v < 4; ++v) finals.push_back(2 + 2 * v);
    Dfa d = make_dfa(9, 0, std::move(finals));
    auto allowed = [](int last, Value v) {
        if (last == 2) return v != 0 && v != 1;
        if (last == 1) return v != 0;
        return true;
    };
    for (Value v = 0; v < 4; ++v) d.add_arc(0, v, 1 + 2 * v);
    for (int last = 0; last < 4; ++last) {
        d.add_arc(1 + 2 * last, last, 2 + 2 * last);  // run grows to 2
        d.add_arc(2 + 2 * last, last, 2 + 2 * last);  // run keeps growing
        for (Value v = 0; v < 4; ++v)
            if (v != last && allowed(last, v))
                d.add_arc(2 + 2 * last, v, 1 + 2 * v);  // switch after >= 2
    }
    return d;
}

std::optional<Dfa> shift_dfa_preset(std::string_view name) {
    if (name == "rest12") return shift_dfa_rest12();
    if (name == "rest12-min2") return shift_dfa_rest12_min2();
    return std::nullopt;
}

// ------------------------------------------------------------- benchmark

namespace {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::kSolution: return "solution";
        case Outcome::kUnsat: return "unsat";
        case Outcome::kLimitReached: return "limit";
    }
    return "";
}

}  // namespace

std::vector<BenchRow> run_benchmark(
    const std::vector<std::pair<std::string, ModelConfig>>& configs,
    const std::vector<std::pair<std::string, NspInstance>>& instances,
    const BenchOptions& opt) {
    std::vector<BenchRow> rows;
    for (const auto& [iname, inst] : instances) {
        for (const auto& [cname, cfg] : configs) {
            BuiltModel bm = build_model(inst, cfg);
            SearchLimits lim;
            lim.time = opt.per_instance;
            const SearchStats st = solve(bm.model, bm.order, lim);
            rows.push_back(BenchRow{cname, iname, st.outcome, st.nodes,
                                    st.backtracks,
                                    static_cast<long>(st.wall.count())});
        }
    }
    return rows;
}

namespace {

// Quote a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string format_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "config,instance,outcome,nodes,backtracks,ms\n";
    for (const BenchRow& r : rows)
        os << csv_field(r.config) << ',' << csv_field(r.instance) << ','
           << outcome_name(r.outcome) << ',' << r.nodes << ','
           << r.backtracks << ',' << r.ms << '\n';
    return os.str();
}

std::string format_table(const std::vector<BenchRow>& rows) {
    const std::array<std::string, 6> header{"config",  "instance",
                                            "outcome", "nodes",
                                            "backtracks", "ms"};
    std::vector<std::array<std::string, 6>> cells;
    cells.reserve(rows.size());
    for (const BenchRow& r : rows)
        cells.push_back({r.config, r.instance, outcome_name(r.outcome),
                         std::to_string(r.nodes), std::to_string(r.backtracks),
                         std::to_string(r.ms)});
    std::array<size_t, 6> width{};
    for (size_t c = 0; c < 6; ++c) {
        width[c] = header[c].size();
        for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    std::ostringstream os;
    auto emit = [&](const std::array<std::string, 6>& row) {
        for (size_t c = 0; c < 6; ++c) {
            const bool numeric = c >= 3;
            const std::string pad(width[c] - row[c].size(), ' ');
            if (c) os << "  ";
            os << (numeric ? pad + row[c] : row[c] + pad);
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : cells) emit(row);
    return os.str();
}

// ------------------------------------------------------ separation model

BuiltModel build_separation_model(int n, bool combined) {
    if (n < 2)
        throw std::invalid_argument("separation: need at least two rows");
    BuiltModel out;
    Model& m = out.model;
    out.vars.reserve(3 * static_cast<size_t>(n));
    for (int r = 1; r <= n; ++r) {
        out.vars.push_back(m.add_var(Domain::interval(1, n - 1)));
        out.vars.push_back(m.add_var(Domain::interval(n + 2 - r, 2 * n - r)));
        out.vars.push_back(m.add_var(Domain{n + 1 - r}));
    }
    auto row = [&](int r) {
        return std::vector<int>{out.vars[3 * r], out.vars[3 * r + 1],
                                out.vars[3 * r + 2]};
    };
    if (combined) {
        const auto sum = std::make_shared<const SumRowAdapter>(1, 0, 2);
        for (int r = 0; r + 1 < n; ++r) post_clex(m, row(r), row(r + 1), sum);
    } else {
        for (int r = 0; r < n; ++r)
            post_sum_eq(m, out.vars[3 * r + 1], out.vars[3 * r],
                        out.vars[3 * r + 2]);
        for (int r = 0; r + 1 < n; ++r)
            post_lex_leq(m, row(r), row(r + 1));
    }
    out.order = out.vars;
    return out;
}

// ------------------------------------------------------------------ CLI

namespace {

Dfa load_dfa(const std::string& preset, const std::string& file) {
    if (!preset.empty() && !file.empty())
        throw std::runtime_error(
            "give either an automaton preset or a file, not both");
    if (!preset.empty()) {
        auto d = shift_dfa_preset(preset);
        if (!d) throw std::runtime_error("unknown automaton preset: " + preset);
        return *d;
    }
    if (!file.empty()) return parse_dfa_file(file);
    throw std::runtime_error("an automaton is required (preset or file)");
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path);
    out << text;
}

struct SeqArgs {
    int preset = 0;
    int l = -1, u = -1, k = -1;
};

ModelConfig make_config(Mode mode, const SeqArgs& seq,
                        const std::string& dfa_preset,
                        const std::string& dfa_file) {
    ModelConfig cfg;
    cfg.mode = mode;
    if (mode_is_boolean(mode)) {
        if (seq.l >= 0 || seq.u >= 0 || seq.k >= 0) {
            if (seq.l < 0 || seq.u < 0 || seq.k < 0)
                throw std::runtime_error("give all of --l --u --k or none");
            cfg.seq = SequenceSpec{seq.l, seq.u, seq.k, {1}};
        } else {
            const auto& presets = boolean_seq_presets();
            if (seq.preset < 0 ||
                seq.preset >= static_cast<int>(presets.size()))
                throw std::runtime_error("work pattern preset out of range");
            cfg.seq = presets[seq.preset];
        }
        cfg.seq.validate();
    } else {
        std::string p = dfa_preset;
        if (p.empty() && dfa_file.empty()) p = "rest12";
        cfg.dfa = load_dfa(p, dfa_file);
    }
    return cfg;
}

std::string config_label(const ModelConfig& cfg, const std::string& dfa_label) {
    std::ostringstream os;
    os << mode_name(cfg.mode);
    if (mode_is_boolean(cfg.mode))
        os << '(' << cfg.seq.l << ',' << cfg.seq.u << ',' << cfg.seq.k << ')';
    else
        os << '[' << dfa_label << ']';
    return os.str();
}

void add_gen_options(CLI::App* cmd, GenParams& gp) {
    cmd->add_option("--nurses", gp.nurses, "number of rows")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--days", gp.days, "number of columns")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--shifts", gp.shifts,
                    "2 for boolean rosters, 4 for day/evening/night/off")
        ->check(CLI::IsMember({2, 4}));
    cmd->add_option("--demand-lo", gp.demand_lo, "least demand per day");
    cmd->add_option("--demand-hi", gp.demand_hi,
                    "greatest demand per day (0: derived from --nurses)");
}

void add_seq_options(CLI::App* cmd, SeqArgs& s) {
    cmd->add_option("--preset", s.preset,
                    "work pattern preset index (boolean modes)");
    cmd->add_option("--l", s.l, "least worked days per window");
    cmd->add_option("--u", s.u, "greatest worked days per window");
    cmd->add_option("--k", s.k, "window length");
}

}  // namespace

int cli_main(int argc, char** argv) {
    CLI::App app{"lexicographically ordered rostering workbench"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("generate", "write a random instance");
    std::uint64_t g_seed = 1;
    GenParams g_params;
    std::string g_out;
    gen->add_option("--seed", g_seed, "random seed");
    add_gen_options(gen, g_params);
    gen->add_option("--out", g_out, "output file (default: stdout)");

    auto* sol = app.add_subcommand("solve", "search one instance");
    std::string s_instance;
    std::uint64_t s_seed = 1;
    GenParams s_params;
    std::string s_mode_name;
    SeqArgs s_seq;
    std::string s_dfa_preset, s_dfa_file;
    long s_time = 10000, s_max_nodes = 0;
    bool s_print = false;
    sol->add_option("--instance", s_instance, "instance file");
    sol->add_option("--seed", s_seed, "generate the instance instead");
    add_gen_options(sol, s_params);
    sol->add_option("--mode", s_mode_name, "propagation mode")->required();
    add_seq_options(sol, s_seq);
    sol->add_option("--dfa-preset", s_dfa_preset,
                    "shift automaton preset (rest12, rest12-min2)");
    sol->add_option("--dfa-file", s_dfa_file, "shift automaton file");
    sol->add_option("--time-limit", s_time, "milliseconds, 0 for none");
    sol->add_option("--max-nodes", s_max_nodes, "node budget, 0 for none");
    sol->add_flag("--print-solution", s_print, "print the roster found");

    auto* ben = app.add_subcommand(
        "bench", "run configurations over seeded instances");
    std::vector<std::string> b_mode_names;
    int b_count = 5;
    std::uint64_t b_seed0 = 1;
    GenParams b_params;
    SeqArgs b_seq;
    std::string b_dfa_preset, b_dfa_file, b_csv;
    long b_per = 10000;
    bool b_table = false;
    ben->add_option("--mode", b_mode_names, "propagation modes")
        ->required()
        ->delimiter(',');
    ben->add_option("--instances", b_count, "number of seeded instances")
        ->check(CLI::PositiveNumber);
    ben->add_option("--seed-base", b_seed0, "seed of the first instance");
    add_gen_options(ben, b_params);
    add_seq_options(ben, b_seq);
    ben->add_option("--dfa-preset", b_dfa_preset, "shift automaton preset");
    ben->add_option("--dfa-file", b_dfa_file, "shift automaton file");
    ben->add_option("--per-instance", b_per, "time budget per run, ms");
    ben->add_option("--csv", b_csv, "write rows to this file");
    ben->add_flag("--table", b_table, "print an aligned table");

    auto* cp = app.add_subcommand(
        "compile-product",
        "write the automaton of interleaved ordered row pairs");
    std::string cp_x_preset, cp_x_file, cp_y_preset, cp_y_file, cp_out;
    cp->add_option("--dfa-x-preset", cp_x_preset, "first row automaton");
    cp->add_option("--dfa-x-file", cp_x_file, "first row automaton file");
    cp->add_option("--dfa-y-preset", cp_y_preset,
                   "second row automaton (default: same as first)");
    cp->add_option("--dfa-y-file", cp_y_file, "second row automaton file");
    cp->add_option("--out", cp_out, "output file (default: stdout)");

    auto* ds = app.add_subcommand(
        "demo-separation",
        "combined vs decomposed filtering on a contrived chain");
    int ds_n = 8;
    long ds_time = 10000;
    ds->add_option("--n", ds_n, "largest chain length")
        ->check(CLI::Range(2, 26));
    ds->add_option("--time-limit", ds_time, "milliseconds per run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            write_out(g_out, format_instance(generate_instance(g_seed,
                                                               g_params)));
            return 0;
        }
        if (*sol) {
            const auto mode = mode_from_name(s_mode_name);
            if (!mode) throw std::runtime_error("unknown mode: " + s_mode_name);
            const NspInstance inst =
                s_instance.empty() ? generate_instance(s_seed, s_params)
                                   : parse_instance_file(s_instance);
            const ModelConfig cfg =
                make_config(*mode, s_seq, s_dfa_preset, s_dfa_file);
            BuiltModel bm = build_model(inst, cfg);
            SearchLimits lim;
            if (s_time > 0) lim.time = std::chrono::milliseconds(s_time);
            if (s_max_nodes > 0) lim.max_nodes = s_max_nodes;
            const SearchStats st = solve(bm.model, bm.order, lim);
            std::cout << "outcome=" << outcome_name(st.outcome)
                      << " nodes=" << st.nodes
                      << " backtracks=" << st.backtracks
                      << " ms=" << st.wall.count() << '\n';
            if (s_print && st.outcome == Outcome::kSolution) {
                for (int r = 0; r < inst.nurses; ++r) {
                    for (int c = 0; c < inst.days; ++c)
                        std::cout
                            << (c ? " " : "")
                            << st.solution[bm.vars[static_cast<size_t>(r) *
                                                       inst.days +
                                                   c]];
                    std::cout << '\n';
                }
            }
            return st.outcome == Outcome::kSolution ? 0 : 1;
        }
        if (*ben) {
            std::vector<std::pair<std::string, ModelConfig>> configs;
            for (const std::string& name : b_mode_names) {
                const auto mode = mode_from_name(name);
                if (!mode) throw std::runtime_error("unknown mode: " + name);
                if (mode_is_boolean(*mode) != (b_params.shifts == 2))
                    throw std::runtime_error(
                        "mode " + name + " does not fit --shifts " +
                        std::to_string(b_params.shifts));
                ModelConfig cfg =
                    make_config(*mode, b_seq, b_dfa_preset, b_dfa_file);
                std::string dfa_label =
                    !b_dfa_file.empty()
                        ? b_dfa_file
                        : (b_dfa_preset.empty() ? "rest12" : b_dfa_preset);
                configs.emplace_back(config_label(cfg, dfa_label),
                                     std::move(cfg));
            }
            std::vector<std::pair<std::string, NspInstance>> instances;
            for (int i = 0; i < b_count; ++i) {
                const std::uint64_t seed = b_seed0 + static_cast<unsigned>(i);
                instances.emplace_back("s" + std::to_string(seed),
                                       generate_instance(seed, b_params));
            }
            BenchOptions opt;
            opt.per_instance = std::chrono::milliseconds(b_per);
            const auto rows = run_benchmark(configs, instances, opt);
            if (!b_csv.empty()) write_out(b_csv, format_csv(rows));
            if (b_table)
                std::cout << format_table(rows);
            else if (b_csv.empty())
                std::cout << format_csv(rows);
            return 0;
        }
        if (*cp) {
            const Dfa x = load_dfa(cp_x_preset, cp_x_file);
            const Dfa y = (cp_y_preset.empty() && cp_y_file.empty())
                              ? x
                              : load_dfa(cp_y_preset, cp_y_file);
            write_out(cp_out, format_dfa(build_product_dfa(x, y)));
            return 0;
        }
        if (*ds) {
            std::cout << "  n  combined  decomposed\n";
            for (int n = 2; n <= ds_n; ++n) {
                std::array<std::string, 2> shown;
                for (const bool combined : {true, false}) {
                    BuiltModel bm = build_separation_model(n, combined);
                    SearchLimits lim;
                    if (ds_time > 0)
                        lim.time = std::chrono::milliseconds(ds_time);
                    const SearchStats st = solve(bm.model, bm.order, lim);
                    std::string text = std::to_string(st.nodes);
                    if (st.outcome == Outcome::kLimitReached)
                        text = ">=" + text;
                    shown[combined ? 0 : 1] = std::move(text);
                }
                std::ostringstream os;
                os.width(3);
                os << n;
                std::cout << os.str() << "  " << shown[0] << "  " << shown[1]
                          << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace clex::nsp
