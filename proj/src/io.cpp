#include "crosscut/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "crosscut/errors.hpp"

namespace crosscut {

namespace {

struct EdgeLine {
    int line;
    int id;
    NodeId u, v;
    std::string weight;
};
struct CrossingLine {
    int line;
    int id;
    int e1, e2;  // file edge ids
};
struct OrderLine {
    int line;
    int edge;
    std::vector<int> crossings;
};
struct SplitLine {
    int line;
    int edge;
};
struct ContractLine {
    int line;
    int h_node, g_node;
};

struct FileScan {
    int g_nodes = -1, g_nodes_line = 0;
    int h_nodes = -1;
    std::vector<EdgeLine> g_edges, h_edges;
    std::vector<CrossingLine> crossings;
    std::vector<OrderLine> orders;
    std::vector<SplitLine> splits;
    std::vector<ContractLine> contracts;
    bool has_realization() const {
        return h_nodes >= 0 || !h_edges.empty() || !splits.empty() ||
               !contracts.empty();
    }
};

int parse_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

FileScan scan(const std::string& text) {
    FileScan fs;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw.substr(0, raw.find('#'));
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;

        auto need = [&](std::size_t n, const char* what) {
            if (tok.size() != n)
                throw ParseError(line_no, std::string("malformed ") + what + " line");
        };
        auto node_count = [&](const std::string& tok_s) {
            int n = parse_int(tok_s, line_no, "node count");
            if (n < 0 || n > 10000000)
                throw ParseError(line_no, "node count out of range");
            return n;
        };
        if (tok[0] == "nodes") {
            need(2, "nodes");
            if (fs.g_nodes >= 0) throw ParseError(line_no, "duplicate nodes line");
            fs.g_nodes = node_count(tok[1]);
            fs.g_nodes_line = line_no;
        } else if (tok[0] == "edge") {
            need(5, "edge");
            fs.g_edges.push_back({line_no, parse_int(tok[1], line_no, "edge id"),
                                  parse_int(tok[2], line_no, "node id"),
                                  parse_int(tok[3], line_no, "node id"), tok[4]});
        } else if (tok[0] == "crossing") {
            need(4, "crossing");
            fs.crossings.push_back({line_no, parse_int(tok[1], line_no, "crossing id"),
                                    parse_int(tok[2], line_no, "edge id"),
                                    parse_int(tok[3], line_no, "edge id")});
        } else if (tok[0] == "order") {
            if (tok.size() < 3) throw ParseError(line_no, "malformed order line");
            OrderLine ol{line_no, parse_int(tok[1], line_no, "edge id"), {}};
            for (std::size_t i = 2; i < tok.size(); ++i)
                ol.crossings.push_back(parse_int(tok[i], line_no, "crossing id"));
            fs.orders.push_back(std::move(ol));
        } else if (tok[0] == "realize" && tok.size() >= 2 && tok[1] == "nodes") {
            need(3, "realize nodes");
            if (fs.h_nodes >= 0)
                throw ParseError(line_no, "duplicate realize nodes line");
            fs.h_nodes = node_count(tok[2]);
        } else if (tok[0] == "realize" && tok.size() >= 2 && tok[1] == "edge") {
            need(6, "realize edge");
            fs.h_edges.push_back({line_no, parse_int(tok[2], line_no, "edge id"),
                                  parse_int(tok[3], line_no, "node id"),
                                  parse_int(tok[4], line_no, "node id"), tok[5]});
        } else if (tok[0] == "split") {
            need(2, "split");
            fs.splits.push_back({line_no, parse_int(tok[1], line_no, "edge id")});
        } else if (tok[0] == "contract") {
            need(3, "contract");
            fs.contracts.push_back({line_no, parse_int(tok[1], line_no, "node id"),
                                    parse_int(tok[2], line_no, "node id")});
        } else {
            throw ParseError(line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    if (fs.g_nodes < 0) throw ParseError(line_no ? line_no : 1, "missing nodes line");
    return fs;
}

WeightedGraph build_graph(int nodes, const std::vector<EdgeLine>& lines, int min_scale,
                          std::map<int, EdgeId>* file_to_edge) {
    std::vector<RawEdge> raw;
    std::map<int, int> id_line;
    raw.reserve(lines.size());
    for (const EdgeLine& el : lines) {
        if (!id_line.emplace(el.id, el.line).second)
            throw ParseError(el.line, "duplicate edge id " + std::to_string(el.id));
        if (el.u < 0 || el.u >= nodes || el.v < 0 || el.v >= nodes)
            throw ParseError(el.line, "node id out of range");
        try {
            weight_decimal_places({{el.u, el.v, el.weight}});
        } catch (const PreconditionError& e) {
            throw ParseError(el.line, e.what());
        }
        raw.push_back({el.u, el.v, el.weight});
    }
    std::vector<EdgeId> raw_to_edge;
    WeightedGraph g;
    try {
        g = normalize_graph(nodes, raw, &raw_to_edge, min_scale);
    } catch (const PreconditionError& e) {
        throw ParseError(lines.empty() ? 1 : lines.front().line, e.what());
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        (*file_to_edge)[lines[i].id] = raw_to_edge[i];  // kNoEdge for dropped loops
    return g;
}

CrossingConfiguration build_config(const FileScan& fs,
                                   const std::map<int, EdgeId>& file_to_edge) {
    auto resolve = [&](int file_id, int line) {
        auto it = file_to_edge.find(file_id);
        if (it == file_to_edge.end())
            throw ParseError(line, "unknown edge id " + std::to_string(file_id));
        if (it->second == kNoEdge)
            throw ParseError(line, "edge " + std::to_string(file_id) +
                                       " was dropped as a self-loop");
        return it->second;
    };
    std::vector<Crossing> crossings;
    std::map<int, int> seen_ids;
    for (const CrossingLine& cl : fs.crossings) {
        if (!seen_ids.emplace(cl.id, cl.line).second)
            throw ParseError(cl.line, "duplicate crossing id " + std::to_string(cl.id));
        crossings.push_back({cl.id, resolve(cl.e1, cl.line), resolve(cl.e2, cl.line)});
    }
    std::map<EdgeId, std::vector<int>> orders;
    for (const OrderLine& ol : fs.orders) {
        EdgeId e = resolve(ol.edge, ol.line);
        if (orders.count(e))
            throw ParseError(ol.line, "duplicate order line for edge " +
                                          std::to_string(ol.edge));
        for (int cid : ol.crossings)
            if (!seen_ids.count(cid))
                throw ParseError(ol.line,
                                 "order names unknown crossing " + std::to_string(cid));
        orders[e] = ol.crossings;
    }
    try {
        return CrossingConfiguration::of(std::move(crossings), std::move(orders));
    } catch (const ConfigError& e) {
        throw ParseError(fs.crossings.empty() ? 1 : fs.crossings.front().line, e.what());
    }
}

}  // namespace

ParsedInstance parse_instance(const std::string& text) {
    FileScan fs = scan(text);
    for (const auto* section : {&fs.g_edges, &fs.h_edges})
        for (const EdgeLine& el : *section) {
            try {
                weight_decimal_places({{el.u, el.v, el.weight}});
            } catch (const PreconditionError& e) {
                throw ParseError(el.line, e.what());
            }
        }
    int scale = std::max(
        [&] {
            std::vector<RawEdge> all;
            for (const EdgeLine& el : fs.g_edges) all.push_back({el.u, el.v, el.weight});
            return all.empty() ? 0 : weight_decimal_places(all);
        }(),
        [&] {
            std::vector<RawEdge> all;
            for (const EdgeLine& el : fs.h_edges)
                all.push_back({0, 0, el.weight});
            return all.empty() ? 0 : weight_decimal_places(all);
        }());

    ParsedInstance out;
    std::map<int, EdgeId> g_file_to_edge;
    out.graph = build_graph(fs.g_nodes, fs.g_edges, scale, &g_file_to_edge);

    if (!fs.has_realization()) {
        out.config = build_config(fs, g_file_to_edge);
        return out;
    }

    if (fs.h_nodes < 0)
        throw ParseError(fs.g_nodes_line, "realization block lacks 'realize nodes'");
    Realization r;
    std::map<int, EdgeId> h_file_to_edge;
    r.h = build_graph(fs.h_nodes, fs.h_edges, scale, &h_file_to_edge);
    for (const SplitLine& sl : fs.splits) {
        auto it = h_file_to_edge.find(sl.edge);
        if (it == h_file_to_edge.end() || it->second == kNoEdge)
            throw ParseError(sl.line, "split names unknown realize edge " +
                                          std::to_string(sl.edge));
        r.split_edges.push_back(it->second);
    }
    std::sort(r.split_edges.begin(), r.split_edges.end());
    if (std::adjacent_find(r.split_edges.begin(), r.split_edges.end()) !=
        r.split_edges.end())
        throw ParseError(fs.splits.front().line, "duplicate split line");
    r.contraction.assign(fs.h_nodes, kNoNode);
    for (const ContractLine& cl : fs.contracts) {
        if (cl.h_node < 0 || cl.h_node >= fs.h_nodes)
            throw ParseError(cl.line, "contract: H node out of range");
        if (cl.g_node < 0 || cl.g_node >= fs.g_nodes)
            throw ParseError(cl.line, "contract: G node out of range");
        if (r.contraction[cl.h_node] != kNoNode)
            throw ParseError(cl.line, "duplicate contract line for H node " +
                                          std::to_string(cl.h_node));
        r.contraction[cl.h_node] = cl.g_node;
    }
    for (NodeId hv = 0; hv < fs.h_nodes; ++hv)
        if (r.contraction[hv] == kNoNode)
            throw ParseError(fs.contracts.empty() ? 1 : fs.contracts.back().line,
                             "H node " + std::to_string(hv) + " has no contract line");

    out.config = build_config(fs, h_file_to_edge);  // crossings live on H
    out.realization = std::move(r);
    return out;
}

namespace {

void write_graph(std::ostringstream& os, const WeightedGraph& g, const char* prefix) {
    os << prefix << "nodes " << g.node_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        os << prefix << "edge " << e << " " << ed.u << " " << ed.v << " "
           << ed.weight.to_decimal_string(g.scale_pow10()) << "\n";
    }
}

void write_config(std::ostringstream& os, const CrossingConfiguration& x,
                  const WeightedGraph& g) {
    for (const Crossing& c : x.crossings())
        os << "crossing " << c.id << " " << c.e1 << " " << c.e2 << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ord = x.order_of(e);
        if (ord.size() < 2) continue;  // singletons are implied
        os << "order " << e;
        for (int id : ord) os << " " << id;
        os << "\n";
    }
}

}  // namespace

std::string serialize_instance(const ParsedInstance& inst) {
    std::ostringstream os;
    write_graph(os, inst.graph, "");
    if (!inst.realization) {
        write_config(os, inst.config, inst.graph);
        return os.str();
    }
    const Realization& r = *inst.realization;
    write_config(os, inst.config, r.h);
    write_graph(os, r.h, "realize ");
    for (EdgeId e : r.split_edges) os << "split " << e << "\n";
    for (NodeId hv = 0; hv < r.h.node_count(); ++hv)
        os << "contract " << hv << " " << r.contraction[hv] << "\n";
    return os.str();
}

}  // namespace crosscut
