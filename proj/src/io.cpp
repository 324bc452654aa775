#include "mowsp/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace mowsp {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line,
                             const std::string& what) {
    throw_error(Errc::parse, origin + ":" + std::to_string(line) + ": " + what);
}

// Line tokenizer keeping track of position for error messages.
struct LineReader {
    const std::string& text;
    const std::string& origin;
    std::size_t pos = 0;
    std::size_t line_no = 0;

    bool next_line(std::vector<std::string>& tokens) {
        tokens.clear();
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string::npos) end = text.size();
            ++line_no;
            std::size_t cur = pos;
            pos = end + 1;
            while (cur < end) {
                while (cur < end && (text[cur] == ' ' || text[cur] == '\t' || text[cur] == '\r'))
                    ++cur;
                std::size_t start = cur;
                while (cur < end && text[cur] != ' ' && text[cur] != '\t' && text[cur] != '\r')
                    ++cur;
                if (cur > start) tokens.emplace_back(text.substr(start, cur - start));
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

double parse_double(const std::string& token, const std::string& origin, std::size_t line) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        parse_fail(origin, line, "expected a number, got '" + token + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& token, const std::string& origin, std::size_t line) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        parse_fail(origin, line, "expected a non-negative integer, got '" + token + "'");
    return value;
}

std::string tags_to_bits(std::uint8_t tags) {
    std::string bits(3, '0');
    if (tags & kTagBicycleRoad) bits[0] = '1';
    if (tags & kTagNearHighway) bits[1] = '1';
    if (tags & kTagNearBuildings) bits[2] = '1';
    return bits;
}

std::uint8_t bits_to_tags(const std::string& bits, const std::string& origin, std::size_t line) {
    if (bits.size() != 3 || bits.find_first_not_of("01") != std::string::npos)
        parse_fail(origin, line, "tag bits must be three 0/1 characters, got '" + bits + "'");
    std::uint8_t tags = 0;
    if (bits[0] == '1') tags |= kTagBicycleRoad;
    if (bits[1] == '1') tags |= kTagNearHighway;
    if (bits[2] == '1') tags |= kTagNearBuildings;
    return tags;
}

std::uint64_t fnv1a(std::uint64_t hash, const std::string& text) {
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace

std::string format_double(double value) {
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, ptr);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_error(Errc::io, "cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw_error(Errc::io, "read failure on '" + path + "'");
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_error(Errc::io, "cannot open '" + path + "' for writing");
    out << content;
    out.flush();
    if (!out) throw_error(Errc::io, "write failure on '" + path + "'");
}

std::string graph_to_text(const Mog& g) {
    std::string out = "mowsp-graph 1 " + std::to_string(g.node_count()) + " " +
                      std::to_string(g.edge_count()) + " " + std::to_string(g.objective_count());
    if (g.has_coords()) out += " coords";
    if (g.has_tags()) out += " tags";
    out += "\n";
    if (g.has_coords()) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            const Coord c = g.coord(v);
            out += "n " + std::to_string(v) + " " + format_double(c.x) + " " +
                   format_double(c.y) + "\n";
        }
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out += "e " + std::to_string(g.edge_from(e)) + " " + std::to_string(g.edge_to(e));
        for (double w : g.edge_objectives(e)) out += " " + format_double(w);
        if (g.has_tags()) out += " " + tags_to_bits(g.edge_tags(e));
        out += "\n";
    }
    return out;
}

Mog graph_from_text(const std::string& text, const std::string& origin) {
    LineReader reader{text, origin};
    std::vector<std::string> tokens;
    if (!reader.next_line(tokens)) parse_fail(origin, 1, "empty graph file");
    if (tokens.size() < 5 || tokens[0] != "mowsp-graph" || tokens[1] != "1")
        parse_fail(origin, reader.line_no, "expected header 'mowsp-graph 1 <V> <E> <W> ...'");

    MogData data;
    data.node_count = parse_u64(tokens[2], origin, reader.line_no);
    const std::uint64_t edge_count = parse_u64(tokens[3], origin, reader.line_no);
    data.objective_count = static_cast<int>(parse_u64(tokens[4], origin, reader.line_no));
    bool has_coords = false;
    for (std::size_t i = 5; i < tokens.size(); ++i) {
        if (tokens[i] == "coords")
            has_coords = true;
        else if (tokens[i] == "tags")
            data.has_tags = true;
        else
            parse_fail(origin, reader.line_no, "unknown header flag '" + tokens[i] + "'");
    }
    if (has_coords) data.coords.assign(data.node_count, Coord{});
    std::vector<bool> coord_seen(has_coords ? data.node_count : 0, false);

    while (reader.next_line(tokens)) {
        if (tokens[0] == "n") {
            if (!has_coords)
                parse_fail(origin, reader.line_no, "coord line in a graph without coords flag");
            if (tokens.size() != 4)
                parse_fail(origin, reader.line_no, "coord line must be 'n <id> <x> <y>'");
            const std::uint64_t id = parse_u64(tokens[1], origin, reader.line_no);
            if (id >= data.node_count) parse_fail(origin, reader.line_no, "node id out of range");
            data.coords[id].x = parse_double(tokens[2], origin, reader.line_no);
            data.coords[id].y = parse_double(tokens[3], origin, reader.line_no);
            coord_seen[id] = true;
        } else if (tokens[0] == "e") {
            const std::size_t expected = 3 + data.objective_count + (data.has_tags ? 1 : 0);
            if (tokens.size() != expected)
                parse_fail(origin, reader.line_no,
                           "edge line must have " + std::to_string(expected) + " fields");
            EdgeRecord e;
            e.from = static_cast<NodeId>(parse_u64(tokens[1], origin, reader.line_no));
            e.to = static_cast<NodeId>(parse_u64(tokens[2], origin, reader.line_no));
            e.objectives.resize(data.objective_count);
            for (int j = 0; j < data.objective_count; ++j) {
                const double w = parse_double(tokens[3 + j], origin, reader.line_no);
                if (!std::isfinite(w) || w < 0.0)
                    throw_error(Errc::format, origin + ":" + std::to_string(reader.line_no) +
                                                  ": objective values must be finite and >= 0");
                e.objectives[j] = w;
            }
            if (data.has_tags)
                e.tags = bits_to_tags(tokens[3 + data.objective_count], origin, reader.line_no);
            data.edges.push_back(std::move(e));
        } else {
            parse_fail(origin, reader.line_no, "unknown record '" + tokens[0] + "'");
        }
    }

    if (data.edges.size() != edge_count)
        throw_error(Errc::format, origin + ": header declares " + std::to_string(edge_count) +
                                      " edges, body has " + std::to_string(data.edges.size()));
    if (has_coords)
        for (std::size_t v = 0; v < data.node_count; ++v)
            if (!coord_seen[v])
                throw_error(Errc::format,
                            origin + ": missing coord line for node " + std::to_string(v));

    const ValidationReport report = validate_mog(data);
    if (!report.ok()) {
        for (const auto& issue : report.issues)
            if (issue.is_error)
                throw_error(Errc::format, origin + ": " + issue.message);
    }
    return Mog(std::move(data));
}

Mog read_graph(const std::string& path) { return graph_from_text(read_text_file(path), path); }

void write_graph(const Mog& g, const std::string& path) {
    write_text_file(path, graph_to_text(g));
}

std::string lambdas_to_text(const LambdaSet& lambdas) {
    std::string out = "mowsp-lambda 1 " + std::to_string(lambdas.k()) + " " +
                      std::to_string(lambdas.w()) + "\n";
    for (int i = 0; i < lambdas.k(); ++i) {
        for (int j = 0; j < lambdas.w(); ++j) {
            if (j) out += " ";
            out += format_double(lambdas[i][j]);
        }
        out += "\n";
    }
    return out;
}

LambdaSet lambdas_from_text(const std::string& text, const std::string& origin) {
    LineReader reader{text, origin};
    std::vector<std::string> tokens;
    if (!reader.next_line(tokens)) parse_fail(origin, 1, "empty lambda file");
    if (tokens.size() != 4 || tokens[0] != "mowsp-lambda" || tokens[1] != "1")
        parse_fail(origin, reader.line_no, "expected header 'mowsp-lambda 1 <K> <W>'");
    const std::uint64_t k = parse_u64(tokens[2], origin, reader.line_no);
    const std::uint64_t w = parse_u64(tokens[3], origin, reader.line_no);
    if (k < 1 || w < 1)
        throw_error(Errc::format, origin + ": K and W must be >= 1");

    std::vector<CoefficientVector> vectors;
    while (reader.next_line(tokens)) {
        if (tokens.size() != w)
            parse_fail(origin, reader.line_no,
                       "expected " + std::to_string(w) + " coefficients");
        std::vector<double> values(w);
        for (std::size_t j = 0; j < w; ++j) {
            values[j] = parse_double(tokens[j], origin, reader.line_no);
            if (!std::isfinite(values[j]) || values[j] <= 0.0)
                throw_error(Errc::format, origin + ":" + std::to_string(reader.line_no) +
                                              ": coefficients must be finite and > 0");
        }
        vectors.emplace_back(std::move(values));
    }
    if (vectors.size() != k)
        throw_error(Errc::format, origin + ": header declares " + std::to_string(k) +
                                      " vectors, body has " + std::to_string(vectors.size()));
    return LambdaSet(std::move(vectors));
}

LambdaSet read_lambdas(const std::string& path) {
    return lambdas_from_text(read_text_file(path), path);
}

void write_lambdas(const LambdaSet& lambdas, const std::string& path) {
    write_text_file(path, lambdas_to_text(lambdas));
}

std::string instance_digest(const Mog& g, const LambdaSet& lambdas) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    hash = fnv1a(hash, graph_to_text(g));
    hash = fnv1a(hash, std::string(1, '\0'));
    hash = fnv1a(hash, lambdas_to_text(lambdas));
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

SolutionDocument make_solution_document(const Mog& g, const LambdaSet& lambdas, NodeId source,
                                        const SolveResult& result, const std::string& algorithm,
                                        bool include_paths) {
    SolutionDocument doc;
    doc.digest = instance_digest(g, lambdas);
    doc.algorithm = algorithm;
    doc.source = source;
    doc.k = lambdas.k();
    doc.w = lambdas.w();
    doc.stats = result.stats;
    doc.lambdas.resize(doc.k);
    for (int i = 0; i < doc.k; ++i)
        doc.lambdas[i].assign(lambdas[i].values().begin(), lambdas[i].values().end());
    doc.per_lambda.resize(doc.k);
    for (int i = 0; i < doc.k; ++i) {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            if (!result.has(i, v)) continue;
            SolutionEntry entry;
            entry.node = v;
            entry.cost = result.cost(i, v);
            const auto totals = result.path_totals(i, v);
            entry.totals.assign(totals.begin(), totals.end());
            if (include_paths) entry.path_nodes = result.path_nodes(i, v);
            doc.per_lambda[i].push_back(std::move(entry));
        }
    }
    return doc;
}

std::string solution_to_json(const SolutionDocument& doc) {
    json j;
    j["format"] = "mowsp-solution";
    j["version"] = 1;
    j["instance_digest"] = doc.digest;
    j["algorithm"] = doc.algorithm;
    j["source"] = doc.source;
    j["k"] = doc.k;
    j["w"] = doc.w;
    j["lambdas"] = doc.lambdas;
    j["stats"] = {{"developed", doc.stats.developed_paths},
                  {"scanned", doc.stats.scanned_paths},
                  {"cost_evaluations", doc.stats.cost_evaluations},
                  {"heap_ops", doc.stats.heap_ops},
                  {"wall_ms", doc.stats.wall_ms}};
    json sols = json::array();
    for (int i = 0; i < doc.k; ++i) {
        json entries = json::array();
        for (const SolutionEntry& e : doc.per_lambda[i]) {
            json je{{"node", e.node}, {"cost", e.cost}, {"totals", e.totals}};
            if (e.path_nodes) je["path"] = *e.path_nodes;
            entries.push_back(std::move(je));
        }
        sols.push_back({{"lambda_index", i + 1}, {"entries", std::move(entries)}});
    }
    j["solutions"] = std::move(sols);
    return j.dump(1) + "\n";
}

SolutionDocument solution_from_json(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw_error(Errc::parse, origin + ": " + e.what());
    }
    try {
        if (j.at("format") != "mowsp-solution")
            throw_error(Errc::format, origin + ": not a mowsp-solution document");
        SolutionDocument doc;
        doc.digest = j.at("instance_digest").get<std::string>();
        doc.algorithm = j.value("algorithm", "");
        doc.source = j.at("source").get<NodeId>();
        doc.k = j.at("k").get<int>();
        doc.w = j.at("w").get<int>();
        doc.lambdas = j.at("lambdas").get<std::vector<std::vector<double>>>();
        if (j.contains("stats")) {
            const json& s = j["stats"];
            doc.stats.developed_paths = s.value("developed", 0ull);
            doc.stats.scanned_paths = s.value("scanned", 0ull);
            doc.stats.cost_evaluations = s.value("cost_evaluations", 0ull);
            doc.stats.heap_ops = s.value("heap_ops", 0ull);
            doc.stats.wall_ms = s.value("wall_ms", 0.0);
        }
        if (static_cast<int>(doc.lambdas.size()) != doc.k)
            throw_error(Errc::format, origin + ": lambda count does not match k");
        doc.per_lambda.resize(doc.k);
        for (const json& sol : j.at("solutions")) {
            const int index = sol.at("lambda_index").get<int>();
            if (index < 1 || index > doc.k)
                throw_error(Errc::format, origin + ": lambda_index out of range");
            auto& list = doc.per_lambda[index - 1];
            for (const json& je : sol.at("entries")) {
                SolutionEntry entry;
                entry.node = je.at("node").get<NodeId>();
                entry.cost = je.at("cost").get<double>();
                entry.totals = je.at("totals").get<std::vector<double>>();
                if (je.contains("path"))
                    entry.path_nodes = je["path"].get<std::vector<NodeId>>();
                list.push_back(std::move(entry));
            }
        }
        return doc;
    } catch (const json::exception& e) {
        throw_error(Errc::format, origin + ": " + e.what());
    }
}

SolutionDocument read_solution(const std::string& path) {
    return solution_from_json(read_text_file(path), path);
}

void write_solution(const SolutionDocument& doc, const std::string& path) {
    write_text_file(path, solution_to_json(doc));
}

namespace {

bool rel_close(double a, double b, double tol) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= tol * scale;
}

// lambda_i . totals must reproduce the stated cost (1e-9 relative).
bool entry_integrity(const SolutionDocument& doc, int i, const SolutionEntry& e,
                     std::string& detail) {
    if (static_cast<int>(e.totals.size()) != doc.w) {
        detail = "entry totals have wrong dimension";
        return false;
    }
    double recost = 0.0;
    for (int j = 0; j < doc.w; ++j) recost += doc.lambdas[i][j] * e.totals[j];
    if (!rel_close(recost, e.cost, 1e-9)) {
        detail = "stated cost " + format_double(e.cost) + " does not re-cost (" +
                 format_double(recost) + ")";
        return false;
    }
    return true;
}

}  // namespace

VerifyReport verify_solutions(const SolutionDocument& a, const SolutionDocument& b,
                              double tolerance) {
    if (a.digest != b.digest)
        throw_error(Errc::invalid_argument,
                    "instance digest mismatch: " + a.digest + " vs " + b.digest);
    if (a.k != b.k)
        throw_error(Errc::invalid_argument, "solution K mismatch");

    auto where = [](int i, NodeId v) {
        return " at (lambda " + std::to_string(i + 1) + ", node " + std::to_string(v) + ")";
    };

    for (int i = 0; i < a.k; ++i) {
        std::string detail;
        for (const SolutionEntry& e : a.per_lambda[i])
            if (!entry_integrity(a, i, e, detail))
                return {false, "integrity failure in first file" + where(i, e.node) + ": " + detail};
        for (const SolutionEntry& e : b.per_lambda[i])
            if (!entry_integrity(b, i, e, detail))
                return {false, "integrity failure in second file" + where(i, e.node) + ": " + detail};

        std::size_t ia = 0, ib = 0;
        const auto& la = a.per_lambda[i];
        const auto& lb = b.per_lambda[i];
        while (ia < la.size() || ib < lb.size()) {
            if (ia < la.size() && (ib == lb.size() || la[ia].node < lb[ib].node))
                return {false, "node only in first file" + where(i, la[ia].node)};
            if (ib < lb.size() && (ia == la.size() || lb[ib].node < la[ia].node))
                return {false, "node only in second file" + where(i, lb[ib].node)};
            if (!rel_close(la[ia].cost, lb[ib].cost, tolerance))
                return {false, "cost divergence" + where(i, la[ia].node) + ": " +
                                   format_double(la[ia].cost) + " vs " +
                                   format_double(lb[ib].cost)};
            ++ia;
            ++ib;
        }
    }
    return {true, "costs agree for all (lambda, node) pairs"};
}

std::string export_geojson(const Mog& g, const SolutionDocument& sol,
                           std::span<const NodeId> targets,
                           std::vector<std::string>* warnings) {
    if (!g.has_coords())
        throw_error(Errc::invalid_argument, "geojson export requires node coordinates");

    auto warn = [&](const std::string& msg) {
        if (warnings) warnings->push_back(msg);
    };

    json features = json::array();
    for (int i = 0; i < sol.k; ++i) {
        for (NodeId target : targets) {
            if (target >= g.node_count())
                throw_error(Errc::invalid_argument,
                            "target node " + std::to_string(target) + " out of range");
            const SolutionEntry* entry = nullptr;
            for (const SolutionEntry& e : sol.per_lambda[i])
                if (e.node == target) {
                    entry = &e;
                    break;
                }
            if (!entry) {
                warn("target " + std::to_string(target) + " unreachable for lambda " +
                     std::to_string(i + 1) + "; feature omitted");
                continue;
            }
            if (!entry->path_nodes) {
                warn("solution entry for target " + std::to_string(target) +
                     " carries no path; feature omitted");
                continue;
            }
            json coordinates = json::array();
            for (NodeId v : *entry->path_nodes) {
                const Coord c = g.coord(v);
                coordinates.push_back({c.x, c.y});
            }
            features.push_back({{"type", "Feature"},
                                {"geometry",
                                 {{"type", "LineString"}, {"coordinates", std::move(coordinates)}}},
                                {"properties",
                                 {{"lambda_index", i + 1},
                                  {"target", target},
                                  {"cost", entry->cost}}}});
        }
    }
    json doc{{"type", "FeatureCollection"}, {"features", std::move(features)}};
    return doc.dump(1) + "\n";
}

}  // namespace mowsp
