#include "clex/dfa.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace clex {

bool Dfa::is_final(int state) const {
    return std::binary_search(finals.begin(), finals.end(), state);
}

int Dfa::step(int state, Value label) const {
    const auto& out = next[state];
    auto it = std::lower_bound(
        out.begin(), out.end(), label,
        [](const Arc& a, Value v) { return a.label < v; });
    if (it == out.end() || it->label != label) return -1;
    return it->to;
}

bool Dfa::accepts(const std::vector<Value>& word) const {
    int q = initial;
    for (Value v : word) {
        q = step(q, v);
        if (q < 0) return false;
    }
    return is_final(q);
}

std::vector<Value> Dfa::alphabet() const {
    std::vector<Value> out;
    for (const auto& arcs : next)
        for (const Arc& a : arcs) out.push_back(a.label);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Dfa::add_arc(int from, Value label, int to) {
    if (from < 0 || from >= num_states || to < 0 || to >= num_states)
        throw std::invalid_argument("dfa: arc endpoint out of range");
    auto& out = next[from];
    auto it = std::lower_bound(
        out.begin(), out.end(), label,
        [](const Arc& a, Value v) { return a.label < v; });
    if (it != out.end() && it->label == label)
        throw std::invalid_argument("dfa: duplicate transition");
    out.insert(it, Arc{label, to});
}

Dfa make_dfa(int num_states, int initial, std::vector<int> finals) {
    if (num_states <= 0)
        throw std::invalid_argument("dfa: need at least one state");
    if (initial < 0 || initial >= num_states)
        throw std::invalid_argument("dfa: initial state out of range");
    std::sort(finals.begin(), finals.end());
    finals.erase(std::unique(finals.begin(), finals.end()), finals.end());
    for (int f : finals)
        if (f < 0 || f >= num_states)
            throw std::invalid_argument("dfa: final state out of range");
    Dfa d;
    d.num_states = num_states;
    d.initial = initial;
    d.finals = std::move(finals);
    d.next.resize(num_states);
    return d;
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "dfa parse error at line " << line << ": " << what;
    throw std::runtime_error(os.str());
}

// Reads the next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

Dfa parse_dfa(std::istream& in) {
    int lineno = 0;
    std::string line;
    if (!next_content_line(in, line, lineno))
        parse_fail(lineno + 1, "missing header");

    std::istringstream hs(line);
    std::string kw_states, kw_initial, kw_finals;
    int num_states = 0, initial = 0;
    if (!(hs >> kw_states >> num_states >> kw_initial >> initial >>
          kw_finals) ||
        kw_states != "states" || kw_initial != "initial" ||
        kw_finals != "finals")
        parse_fail(lineno, "expected 'states K initial I finals F...'");
    std::vector<int> finals;
    int f;
    while (hs >> f) finals.push_back(f);
    if (!hs.eof()) parse_fail(lineno, "malformed final state list");

    Dfa d;
    try {
        d = make_dfa(num_states, initial, std::move(finals));
    } catch (const std::invalid_argument& e) {
        parse_fail(lineno, e.what());
    }

    while (next_content_line(in, line, lineno)) {
        std::istringstream as(line);
        int from, to;
        Value label;
        if (!(as >> from >> label >> to))
            parse_fail(lineno, "expected 'from label to'");
        std::string rest;
        if (as >> rest) parse_fail(lineno, "trailing tokens after arc");
        try {
            d.add_arc(from, label, to);
        } catch (const std::invalid_argument& e) {
            parse_fail(lineno, e.what());
        }
    }
    return d;
}

Dfa parse_dfa_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dfa file: " + path);
    return parse_dfa(in);
}

std::string format_dfa(const Dfa& d) {
    std::ostringstream os;
    os << "states " << d.num_states << " initial " << d.initial << " finals";
    for (int f : d.finals) os << ' ' << f;
    os << '\n';
    for (int s = 0; s < d.num_states; ++s)
        for (const Dfa::Arc& a : d.next[s])
            os << s << ' ' << a.label << ' ' << a.to << '\n';
    return os.str();
}

}  // namespace clex
