#include "mndp/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace mndp {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
    std::string raw;  // comment-stripped remainder
};

[[noreturn]] void fail(int line, const std::string& why) {
    throw input_error("line " + std::to_string(line) + ": " + why);
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back({number, std::move(tokens), raw});
    }
    return lines;
}

int parse_int(const Line& line, const std::string& tok, const std::string& what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        fail(line.number, "expected " + what + ", got '" + tok + "'");
    }
}

}  // namespace

Instance parse_instance(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw input_error("line 1: missing 'p mndp' header");
    const Line& head = lines.front();
    if (head.tokens.size() != 5 || head.tokens[0] != "p" || head.tokens[1] != "mndp")
        fail(head.number, "expected 'p mndp <n> <m> <k>'");
    int n = parse_int(head, head.tokens[2], "vertex count");
    int m = parse_int(head, head.tokens[3], "edge count");
    int k = parse_int(head, head.tokens[4], "demand count");
    if (n < 0 || m < 0 || k < 0) fail(head.number, "negative count in header");

    Graph g(n);
    std::vector<Demand> demands;
    std::optional<int> target;
    std::set<int> labeled;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const auto& t = line.tokens;
        if (t[0] == "e") {
            if (t.size() != 3) fail(line.number, "expected 'e <u> <v>'");
            try {
                g.add_edge(parse_int(line, t[1], "vertex id"), parse_int(line, t[2], "vertex id"));
            } catch (const input_error& err) {
                fail(line.number, err.what());
            }
        } else if (t[0] == "d") {
            if (t.size() != 3) fail(line.number, "expected 'd <s> <t>'");
            int a = parse_int(line, t[1], "vertex id");
            int b = parse_int(line, t[2], "vertex id");
            if (a < 1 || a > n || b < 1 || b > n) fail(line.number, "demand endpoint out of range");
            if (a == b) fail(line.number, "demand endpoints must differ");
            demands.push_back({a, b});
        } else if (t[0] == "l") {
            if (t.size() != 2) fail(line.number, "expected 'l <ell>'");
            if (target) fail(line.number, "duplicate 'l' line");
            target = parse_int(line, t[1], "target");
        } else if (t[0] == "label") {
            if (t.size() < 3) fail(line.number, "expected 'label <v> <text>'");
            int v = parse_int(line, t[1], "vertex id");
            if (v < 1 || v > n) fail(line.number, "label vertex out of range");
            if (!labeled.insert(v).second) fail(line.number, "duplicate label for vertex " + t[1]);
            auto pos = line.raw.find(t[1]);
            pos = line.raw.find_first_not_of(" \t", pos + t[1].size());
            std::string label = line.raw.substr(pos);
            while (!label.empty() && (label.back() == ' ' || label.back() == '\t' || label.back() == '\r'))
                label.pop_back();
            g.set_label(v, label);
        } else if (t[0] == "p") {
            fail(line.number, "duplicate header");
        } else {
            fail(line.number, "unknown line type '" + t[0] + "'");
        }
    }
    if (g.m() != m)
        throw input_error("header says " + std::to_string(m) + " edges, file has " +
                          std::to_string(g.m()));
    if (static_cast<int>(demands.size()) != k)
        throw input_error("header says " + std::to_string(k) + " demands, file has " +
                          std::to_string(demands.size()));
    if (target && (*target < 0 || *target > k))
        throw input_error("target " + std::to_string(*target) + " outside 0.." + std::to_string(k));
    return Instance(std::move(g), std::move(demands), target);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p mndp " << inst.g.n() << ' ' << inst.g.m() << ' ' << inst.k() << '\n';
    if (inst.target) out << "l " << *inst.target << '\n';
    if (inst.g.has_labels())
        for (int v = 1; v <= inst.g.n(); ++v)
            if (!inst.g.label(v).empty()) out << "label " << v << ' ' << inst.g.label(v) << '\n';
    for (auto [u, v] : inst.g.edges()) out << "e " << u << ' ' << v << '\n';
    for (const auto& d : inst.demands) out << "d " << d.a << ' ' << d.b << '\n';
    return out.str();
}

Routing parse_routing(const std::string& text) {
    Routing routing;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] != "r") fail(line.number, "expected 'r <demand> <v1> ...'");
        if (t.size() < 3) fail(line.number, "routing entry needs a demand index and a path");
        RoutingEntry entry;
        entry.demand = parse_int(line, t[1], "demand index") - 1;
        if (entry.demand < 0) fail(line.number, "demand indices are 1-based");
        for (std::size_t i = 2; i < t.size(); ++i)
            entry.path.push_back(parse_int(line, t[i], "vertex id"));
        routing.push_back(std::move(entry));
    }
    return routing;
}

std::string serialize_routing(const Routing& routing) {
    std::ostringstream out;
    for (const auto& e : routing) {
        out << "r " << e.demand + 1;
        for (int v : e.path) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

bool WitnessFile::has(const std::string& key) const {
    if (key == "fes") return !fes_edges.empty();
    if (key == "td") return !td_parents.empty();
    return vertex_sets.count(key) > 0;
}

WitnessFile parse_witness(const std::string& text) {
    WitnessFile wf;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] != "w" || t.size() < 2) fail(line.number, "expected 'w <param> <items>'");
        const std::string& param = t[1];
        if (param == "fes") {
            for (std::size_t i = 2; i < t.size(); ++i) {
                auto comma = t[i].find(',');
                if (comma == std::string::npos) fail(line.number, "fes items are 'u,v' pairs");
                Line tmp = line;
                int u = parse_int(tmp, t[i].substr(0, comma), "vertex id");
                int v = parse_int(tmp, t[i].substr(comma + 1), "vertex id");
                wf.fes_edges.emplace_back(std::min(u, v), std::max(u, v));
            }
        } else if (param == "td") {
            for (std::size_t i = 2; i < t.size(); ++i)
                wf.td_parents.push_back(parse_int(line, t[i], "parent id"));
        } else if (param == "vc" || param == "cvd" || param == "vi" || param == "fvs") {
            auto& set = wf.vertex_sets[param];
            for (std::size_t i = 2; i < t.size(); ++i)
                set.push_back(parse_int(line, t[i], "vertex id"));
        } else {
            fail(line.number, "unknown parameter '" + param + "'");
        }
    }
    return wf;
}

namespace {

SourceVertex parse_source_vertex(const Line& line, const std::string& tok,
                                 const SourceInstance& src) {
    std::vector<int> parts;
    std::size_t start = 0;
    while (start <= tok.size()) {
        auto dot = tok.find('.', start);
        std::string piece = tok.substr(start, dot == std::string::npos ? dot : dot - start);
        parts.push_back(parse_int(line, piece, "class.index component"));
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    bool chained = src.kind == SourceInstance::Kind::ChainedMulticoloredClique;
    SourceVertex v;
    if (!chained && parts.size() == 2) {
        v = {parts[0], parts[1]};
    } else if (chained && parts.size() == 3) {
        if (parts[0] < 1 || parts[0] > src.r) fail(line.number, "level out of range");
        if (parts[1] < 1 || parts[1] > src.k) fail(line.number, "color out of range");
        v = {(parts[0] - 1) * src.k + parts[1], parts[2]};
    } else {
        fail(line.number, "bad vertex '" + tok + "'");
    }
    if (v.cls < 1 || v.cls > src.classes()) fail(line.number, "class out of range in '" + tok + "'");
    if (v.index < 1 || v.index > src.n) fail(line.number, "index out of range in '" + tok + "'");
    return v;
}

}  // namespace

bool SourceInstance::has_edge(SourceVertex a, SourceVertex b) const {
    if (b < a) std::swap(a, b);
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

SourceInstance parse_source(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw input_error("line 1: missing source header");
    const Line& head = lines.front();
    SourceInstance src;
    if (head.tokens.size() >= 2 && head.tokens[0] == "p" && head.tokens[1] == "mcq" &&
        head.tokens.size() == 4) {
        src.kind = SourceInstance::Kind::MulticoloredClique;
        src.k = parse_int(head, head.tokens[2], "class count");
        src.n = parse_int(head, head.tokens[3], "class size");
    } else if (head.tokens.size() == 4 && head.tokens[0] == "p" && head.tokens[1] == "mdks") {
        src.kind = SourceInstance::Kind::DistributedKSubgraph;
        src.k = parse_int(head, head.tokens[2], "class count");
        src.n = parse_int(head, head.tokens[3], "class size");
    } else if (head.tokens.size() == 5 && head.tokens[0] == "p" && head.tokens[1] == "cmc") {
        src.kind = SourceInstance::Kind::ChainedMulticoloredClique;
        src.r = parse_int(head, head.tokens[2], "level count");
        src.k = parse_int(head, head.tokens[3], "color count");
        src.n = parse_int(head, head.tokens[4], "class size");
    } else {
        fail(head.number, "expected 'p mcq <k> <n>', 'p mdks <k> <n>' or 'p cmc <r> <k> <n>'");
    }
    if (src.k < 1 || src.n < 1 || src.r < 1) fail(head.number, "source dimensions must be positive");

    std::set<std::pair<SourceVertex, SourceVertex>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "e" || line.tokens.size() != 3)
            fail(line.number, "expected 'e <a> <b>'");
        SourceVertex a = parse_source_vertex(line, line.tokens[1], src);
        SourceVertex b = parse_source_vertex(line, line.tokens[2], src);
        if (a.cls == b.cls) fail(line.number, "edges must join distinct classes");
        if (src.kind == SourceInstance::Kind::ChainedMulticoloredClique &&
            std::abs(src.level(a.cls) - src.level(b.cls)) > 1)
            fail(line.number, "edges may only join the same or adjacent levels");
        if (b < a) std::swap(a, b);
        if (!seen.insert({a, b}).second) fail(line.number, "duplicate edge");
        src.edges.emplace_back(a, b);
    }

    if (src.kind == SourceInstance::Kind::DistributedKSubgraph) {
        // support of a class = number of other classes it shares an edge with
        std::vector<std::set<int>> partners(src.k + 1);
        for (auto [a, b] : src.edges) {
            partners[a.cls].insert(b.cls);
            partners[b.cls].insert(a.cls);
        }
        for (int c = 1; c <= src.k; ++c)
            if (partners[c].size() < 1 || partners[c].size() > 3)
                throw input_error("class " + std::to_string(c) + " has support " +
                                  std::to_string(partners[c].size()) + ", need 1..3");
    }
    return src;
}

std::vector<int> parse_selection(const std::string& text, const SourceInstance& src) {
    std::vector<int> chosen(src.classes() + 1, 0);
    bool chained = src.kind == SourceInstance::Kind::ChainedMulticoloredClique;
    for (const Line& line : tokenize(text)) {
        const auto& t = line.tokens;
        if (t[0] != "s") fail(line.number, "expected 's' lines");
        int cls, idx;
        if (!chained && t.size() == 3) {
            cls = parse_int(line, t[1], "class id");
            idx = parse_int(line, t[2], "vertex index");
        } else if (chained && t.size() == 4) {
            int lvl = parse_int(line, t[1], "level");
            int col = parse_int(line, t[2], "color");
            if (lvl < 1 || lvl > src.r) fail(line.number, "level out of range");
            if (col < 1 || col > src.k) fail(line.number, "color out of range");
            cls = (lvl - 1) * src.k + col;
            idx = parse_int(line, t[3], "vertex index");
        } else {
            fail(line.number, chained ? "expected 's <level> <color> <index>'"
                                      : "expected 's <class> <index>'");
        }
        if (cls < 1 || cls > src.classes()) fail(line.number, "class out of range");
        if (idx < 1 || idx > src.n) fail(line.number, "index out of range");
        if (chosen[cls]) fail(line.number, "class " + std::to_string(cls) + " selected twice");
        chosen[cls] = idx;
    }
    for (int c = 1; c <= src.classes(); ++c)
        if (!chosen[c]) throw input_error("selection missing class " + std::to_string(c));
    return chosen;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write '" + path + "'");
    out << content;
}

}  // namespace mndp
