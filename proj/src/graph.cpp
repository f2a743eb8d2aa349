#include "ksba/graph.hpp"

#include "ksba/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace ksba {

using nlohmann::json;

std::size_t DualGraph::add_curve(const std::string& id, int self_intersection, int genus) {
    if (id.empty()) throw InvalidGraph("empty curve id");
    if (genus < 0) throw InvalidGraph("negative genus for " + id);
    if (index_.count(id) != 0) throw DuplicateId(id);
    index_[id] = vertices_.size();
    vertices_.push_back({id, self_intersection, genus});
    return vertices_.size() - 1;
}

void DualGraph::add_edge(const std::string& a, const std::string& b, int multiplicity) {
    std::size_t i = index_of(a);
    std::size_t j = index_of(b);
    if (i == j) throw InvalidGraph("self-loop at " + a);
    if (multiplicity < 1) throw InvalidGraph("edge " + a + "-" + b + " needs positive multiplicity");
    auto key = std::minmax(i, j);
    if (edges_.count(key) != 0) throw InvalidGraph("duplicate edge " + a + "-" + b);
    edges_[key] = multiplicity;
}

std::optional<std::size_t> DualGraph::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t DualGraph::index_of(const std::string& id) const {
    auto i = find(id);
    if (!i) throw UnknownId(id);
    return *i;
}

int DualGraph::multiplicity(std::size_t i, std::size_t j) const {
    auto it = edges_.find(std::minmax(i, j));
    return it == edges_.end() ? 0 : it->second;
}

std::vector<std::size_t> DualGraph::neighbours(std::size_t i) const {
    std::vector<std::size_t> out;
    for (const auto& [key, m] : edges_) {
        if (key.first == i) out.push_back(key.second);
        if (key.second == i) out.push_back(key.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DualGraph::valence(std::size_t i) const {
    int v = 0;
    for (const auto& [key, m] : edges_) {
        if (key.first == i || key.second == i) v += m;
    }
    return v;
}

std::vector<std::vector<std::size_t>> DualGraph::components() const {
    std::vector<int> comp(size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> members;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (std::size_t w : neighbours(v)) {
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool DualGraph::is_connected() const { return components().size() <= 1; }

DualGraph DualGraph::induced(const std::vector<std::size_t>& idx) const {
    DualGraph g;
    for (std::size_t i : idx) {
        const auto& v = vertex(i);
        g.add_curve(v.id, v.self_intersection, v.genus);
    }
    for (std::size_t a = 0; a < idx.size(); ++a) {
        for (std::size_t b = a + 1; b < idx.size(); ++b) {
            int m = multiplicity(idx[a], idx[b]);
            if (m > 0) g.add_edge(vertex(idx[a]).id, vertex(idx[b]).id, m);
        }
    }
    return g;
}

SymMatrix intersection_matrix(const DualGraph& g) {
    SymMatrix m(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) m.set(i, i, g.vertex(i).self_intersection);
    for (const auto& [key, mult] : g.edges()) m.set(key.first, key.second, mult);
    return m;
}

const char* to_string(ShapeKind k) {
    switch (k) {
        case ShapeKind::String: return "String";
        case ShapeKind::Cycle: return "Cycle";
        case ShapeKind::SingleFork: return "SingleFork";
        case ShapeKind::DoubleFork: return "DoubleFork";
        case ShapeKind::Other: return "Other";
    }
    return "Other";
}

std::vector<std::int64_t> weights_of(const DualGraph& g, const std::vector<std::size_t>& idx) {
    std::vector<std::int64_t> w;
    w.reserve(idx.size());
    for (std::size_t i : idx) w.push_back(-static_cast<std::int64_t>(g.vertex(i).self_intersection));
    return w;
}

namespace {

// Walk a chain starting at `start`, having arrived from `from`, until a vertex of valence != 2.
std::vector<std::size_t> walk(const DualGraph& g, std::size_t from, std::size_t start) {
    std::vector<std::size_t> out{start};
    std::size_t prev = from;
    std::size_t cur = start;
    while (g.valence(cur) == 2) {
        std::size_t next = cur;
        for (std::size_t w : g.neighbours(cur)) {
            if (w != prev) next = w;
        }
        if (next == cur) break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

std::vector<std::size_t> tree_path(const DualGraph& g, std::size_t a, std::size_t b) {
    std::vector<std::size_t> parent(g.size(), g.size());
    std::vector<std::size_t> queue{a};
    parent[a] = a;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (std::size_t w : g.neighbours(queue[q])) {
            if (parent[w] == g.size()) {
                parent[w] = queue[q];
                queue.push_back(w);
            }
        }
    }
    std::vector<std::size_t> path{b};
    while (path.back() != a) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::string token(const DualGraph& g, std::size_t i) {
    const auto& v = g.vertex(i);
    std::string t = std::to_string(-v.self_intersection);
    if (v.genus != 0) t += "g" + std::to_string(v.genus);
    return t;
}

std::string join(const DualGraph& g, const std::vector<std::size_t>& idx) {
    std::string s;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) s += ",";
        s += token(g, idx[k]);
    }
    return s;
}

std::string chain_key(const DualGraph& g, std::vector<std::size_t> idx) {
    std::string fwd = join(g, idx);
    std::reverse(idx.begin(), idx.end());
    return std::min(fwd, join(g, idx));
}

std::string legs_key(const DualGraph& g, const std::vector<std::vector<std::size_t>>& legs) {
    std::vector<std::string> keys;
    for (const auto& l : legs) keys.push_back("[" + join(g, l) + "]");
    std::sort(keys.begin(), keys.end());
    std::string s;
    for (const auto& k : keys) s += k;
    return s;
}

}  // namespace

std::string ShapeDescriptor::signature(const DualGraph& g) const {
    std::string head = to_string(kind);
    switch (kind) {
        case ShapeKind::String:
            return head + ":" + chain_key(g, path);
        case ShapeKind::Cycle: {
            std::string best;
            std::vector<std::size_t> p = path;
            for (int refl = 0; refl < 2; ++refl) {
                for (std::size_t r = 0; r < p.size(); ++r) {
                    std::rotate(p.begin(), p.begin() + 1, p.end());
                    std::string s = join(g, p);
                    if (best.empty() || s < best) best = s;
                }
                std::reverse(p.begin(), p.end());
            }
            return head + ":" + best;
        }
        case ShapeKind::SingleFork:
            return head + ":" + token(g, centers[0]) + legs_key(g, branches);
        case ShapeKind::DoubleFork: {
            std::vector<std::size_t> core = path;
            std::string a = join(g, core) + "|" + legs_key(g, {branches[0], branches[1]}) + "|" +
                            legs_key(g, {branches[2], branches[3]});
            std::reverse(core.begin(), core.end());
            std::string b = join(g, core) + "|" + legs_key(g, {branches[2], branches[3]}) + "|" +
                            legs_key(g, {branches[0], branches[1]});
            return head + ":" + std::min(a, b);
        }
        case ShapeKind::Other: {
            std::vector<std::string> toks;
            for (std::size_t i = 0; i < g.size(); ++i) toks.push_back(token(g, i));
            std::sort(toks.begin(), toks.end());
            std::string s;
            for (const auto& t : toks) s += t + ",";
            return head + ":" + s + std::to_string(g.edges().size());
        }
    }
    return head;
}

ShapeDescriptor shape(const DualGraph& g) {
    if (g.empty()) throw InvalidGraph("empty graph");
    if (!g.is_connected()) throw Disconnected("graph has " + std::to_string(g.components().size()) + " components");
    ShapeDescriptor d;
    const std::size_t n = g.size();
    if (n == 1) {
        d.kind = ShapeKind::String;
        d.path = {0};
        return d;
    }
    long edge_count = 0;
    for (const auto& [key, m] : g.edges()) edge_count += m;
    std::vector<int> val(n);
    for (std::size_t i = 0; i < n; ++i) val[i] = g.valence(i);

    if (edge_count == static_cast<long>(n) && std::all_of(val.begin(), val.end(), [](int v) { return v == 2; })) {
        d.kind = ShapeKind::Cycle;
        d.path = {0};
        std::size_t prev = 0;
        std::size_t cur = g.neighbours(0).front();
        while (cur != 0) {
            d.path.push_back(cur);
            std::size_t next = 0;
            for (std::size_t w : g.neighbours(cur)) {
                if (w != prev) next = w;
            }
            if (n == 2) break;
            prev = cur;
            cur = next;
        }
        return d;
    }
    if (edge_count != static_cast<long>(n) - 1) return d;  // Other

    std::vector<std::size_t> forks;
    std::vector<std::size_t> big;
    for (std::size_t i = 0; i < n; ++i) {
        if (val[i] == 3) forks.push_back(i);
        if (val[i] >= 4) big.push_back(i);
    }
    if (big.empty() && forks.empty()) {
        std::size_t start = 0;
        while (val[start] != 1) ++start;
        d.kind = ShapeKind::String;
        d.path = walk(g, start, g.neighbours(start).front());
        d.path.insert(d.path.begin(), start);
        return d;
    }
    if (big.empty() && forks.size() == 1) {
        d.kind = ShapeKind::SingleFork;
        d.centers = forks;
        for (std::size_t w : g.neighbours(forks[0])) d.branches.push_back(walk(g, forks[0], w));
        return d;
    }
    if (big.empty() && forks.size() == 2) {
        d.kind = ShapeKind::DoubleFork;
        d.centers = forks;
        d.path = tree_path(g, forks[0], forks[1]);
        for (std::size_t f : forks) {
            for (std::size_t w : g.neighbours(f)) {
                if (std::find(d.path.begin(), d.path.end(), w) == d.path.end()) d.branches.push_back(walk(g, f, w));
            }
        }
        return d;
    }
    if (forks.empty() && big.size() == 1 && val[big[0]] == 4 && n == 5) {
        d.kind = ShapeKind::DoubleFork;
        d.centers = {big[0], big[0]};
        d.path = {big[0]};
        for (std::size_t w : g.neighbours(big[0])) d.branches.push_back({w});
        return d;
    }
    return d;
}

namespace {

std::string location(const std::string& text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int int_field(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw SchemaError(where + ": expected integer");
    auto v = j.get<long long>();
    if (v < -1000000 || v > 1000000) throw SchemaError(where + ": value out of range");
    return static_cast<int>(v);
}

}  // namespace

DualGraph parse_graph(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError(location(text, e.byte) + ": malformed JSON");
    }
    if (!doc.is_object()) throw SchemaError("document: expected an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "curves" && key != "edges") throw SchemaError("unknown top-level field '" + key + "'");
    }
    if (!doc.contains("curves") || !doc["curves"].is_array()) throw SchemaError("curves: expected an array");
    DualGraph g;
    const auto& curves = doc["curves"];
    for (std::size_t i = 0; i < curves.size(); ++i) {
        std::string where = "curves[" + std::to_string(i) + "]";
        const auto& c = curves[i];
        if (!c.is_object()) throw SchemaError(where + ": expected an object");
        for (const auto& [key, value] : c.items()) {
            if (key != "id" && key != "self" && key != "genus") throw SchemaError(where + ": unknown field '" + key + "'");
        }
        if (!c.contains("id") || !c["id"].is_string()) throw SchemaError(where + ".id: expected string");
        if (!c.contains("self")) throw SchemaError(where + ".self: missing");
        int self = int_field(c["self"], where + ".self");
        int genus = c.contains("genus") ? int_field(c["genus"], where + ".genus") : 0;
        if (genus < 0) throw SchemaError(where + ".genus: must be non-negative");
        std::string id = c["id"].get<std::string>();
        if (id.empty()) throw SchemaError(where + ".id: empty");
        if (g.find(id)) throw DuplicateId(where + ".id: '" + id + "' already used");
        g.add_curve(id, self, genus);
    }
    if (doc.contains("edges")) {
        const auto& edges = doc["edges"];
        if (!edges.is_array()) throw SchemaError("edges: expected an array");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            std::string where = "edges[" + std::to_string(i) + "]";
            const auto& e = edges[i];
            if (!e.is_array() || e.size() < 2 || e.size() > 3) throw SchemaError(where + ": expected [idA, idB, mult?]");
            for (int k = 0; k < 2; ++k) {
                if (!e[k].is_string()) throw SchemaError(where + "[" + std::to_string(k) + "]: expected curve id");
                if (!g.find(e[k].get<std::string>())) {
                    throw SchemaError(where + "[" + std::to_string(k) + "]: unknown curve '" + e[k].get<std::string>() + "'");
                }
            }
            int mult = e.size() == 3 ? int_field(e[2], where + "[2]") : 1;
            try {
                g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), mult);
            } catch (const InvalidGraph& err) {
                throw SchemaError(where + ": " + err.what());
            }
        }
    }
    return g;
}

std::string serialize_graph(const DualGraph& g) {
    std::ostringstream os;
    os << "{\"curves\":[";
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto& v = g.vertex(i);
        if (i) os << ",";
        os << "{\"id\":" << json(v.id).dump() << ",\"self\":" << v.self_intersection << ",\"genus\":" << v.genus << "}";
    }
    os << "],\"edges\":[";
    bool first = true;
    for (const auto& [key, m] : g.edges()) {
        if (!first) os << ",";
        first = false;
        os << "[" << json(g.vertex(key.first).id).dump() << "," << json(g.vertex(key.second).id).dump() << "," << m << "]";
    }
    os << "]}";
    return os.str();
}

DualGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

}  // namespace ksba
