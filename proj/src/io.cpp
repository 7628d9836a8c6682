#include "crossfree/io.hpp"

#include <fmt/format.h>

#include <cctype>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace crossfree {

using nlohmann::json;

ParseError::ParseError(int line, const std::string& what)
    : DesignError(fmt::format("line {}: {}", line, what)), line(line) {}

std::string write_plain(const Bundle& bundle) {
    std::string out = fmt::format("n {}\n", bundle.ts.n);
    for (const Block& b : bundle.ts.blocks) out += fmt::format("{} {} {}\n", b[0], b[1], b[2]);
    if (bundle.partition) {
        for (int i = 0; i < 3; ++i) {
            out += fmt::format("X{}:", i);
            for (Point p : bundle.partition->parts[i]) out += fmt::format(" {}", p);
            out += "\n";
        }
    }
    if (bundle.coloring) {
        out += fmt::format("colors r={}:", bundle.coloring->r);
        for (int c : bundle.coloring->colors) out += fmt::format(" {}", c);
        out += "\n";
    }
    if (bundle.provenance)
        out += fmt::format("provenance: k={} factor_u={}\n", bundle.provenance->k,
                           bundle.provenance->used_fallback ? "fallback" : "closed-form");
    return out;
}

namespace {

std::vector<int> parse_ints(const std::string& s, int line) {
    std::istringstream iss(s);
    std::vector<int> values;
    int v;
    while (iss >> v) values.push_back(v);
    std::string rest;
    if (iss.bad() || (iss.clear(), iss >> rest))
        throw ParseError(line, fmt::format("expected integers, got '{}'", s));
    return values;
}

}  // namespace

Bundle read_plain(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    if (!std::getline(in, line)) throw ParseError(1, "empty input");
    ++lineno;
    int n = -1;
    if (line.rfind("n ", 0) == 0) {
        auto vals = parse_ints(line.substr(2), lineno);
        if (vals.size() == 1) n = vals[0];
    }
    if (n < 0) throw ParseError(lineno, fmt::format("expected header 'n <count>', got '{}'", line));

    Bundle bundle;
    std::vector<Block> blocks;
    std::array<std::optional<std::vector<Point>>, 3> parts;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.rfind("X", 0) == 0 && line.size() > 2 && line[2] == ':') {
            int idx = line[1] - '0';
            if (idx < 0 || idx > 2) throw ParseError(lineno, "partition part must be X0/X1/X2");
            parts[idx] = parse_ints(line.substr(3), lineno);
        } else if (line.rfind("colors r=", 0) == 0) {
            auto colon = line.find(':');
            if (colon == std::string::npos) throw ParseError(lineno, "malformed colors line");
            auto rvals = parse_ints(line.substr(9, colon - 9), lineno);
            if (rvals.size() != 1) throw ParseError(lineno, "malformed colors line");
            BlockColoring coloring{rvals[0], parse_ints(line.substr(colon + 1), lineno)};
            bundle.coloring = std::move(coloring);
        } else if (line.rfind("provenance:", 0) == 0) {
            Provenance prov;
            std::istringstream fields(line.substr(11));
            std::string field;
            bool have_k = false, have_mode = false;
            while (fields >> field) {
                if (field.rfind("k=", 0) == 0) {
                    prov.k = std::stoi(field.substr(2));
                    have_k = true;
                } else if (field == "factor_u=closed-form") {
                    prov.used_fallback = false;
                    have_mode = true;
                } else if (field == "factor_u=fallback") {
                    prov.used_fallback = true;
                    have_mode = true;
                } else {
                    throw ParseError(lineno, fmt::format("unknown provenance field '{}'", field));
                }
            }
            if (!have_k || !have_mode) throw ParseError(lineno, "incomplete provenance line");
            bundle.provenance = prov;
        } else if (std::isdigit(static_cast<unsigned char>(line[0]))) {
            auto vals = parse_ints(line, lineno);
            if (vals.size() != 3) throw ParseError(lineno, "block line needs three points");
            blocks.push_back(Block{vals[0], vals[1], vals[2]});
        } else {
            throw ParseError(lineno, fmt::format("unrecognized line '{}'", line));
        }
    }
    try {
        bundle.ts = TripleSystem::make(n, std::move(blocks));
    } catch (const DesignError& e) {
        throw ParseError(lineno, e.what());
    }
    int part_count = (parts[0] ? 1 : 0) + (parts[1] ? 1 : 0) + (parts[2] ? 1 : 0);
    if (part_count == 3) {
        bundle.partition = CrossFreePartition::make({*parts[0], *parts[1], *parts[2]});
        check_partition(bundle.ts, *bundle.partition);
    } else if (part_count != 0) {
        throw ParseError(lineno, "partition needs all of X0, X1, X2");
    }
    if (bundle.coloring) check_coloring(bundle.ts, *bundle.coloring);
    return bundle;
}

std::string write_plain_coloring(const BlockColoring& coloring) {
    std::string out = fmt::format("r {}\n", coloring.r);
    for (int c : coloring.colors) out += fmt::format("{}\n", c);
    return out;
}

BlockColoring read_plain_coloring(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, "empty coloring");
    if (line.rfind("r ", 0) != 0) throw ParseError(1, "expected header 'r <count>'");
    BlockColoring coloring{std::stoi(line.substr(2)), {}};
    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto vals = parse_ints(line, lineno);
        if (vals.size() != 1) throw ParseError(lineno, "one color per line");
        coloring.colors.push_back(vals[0]);
    }
    return coloring;
}

std::string write_json(const Bundle& bundle) {
    json doc;
    doc["format"] = "sts-1";
    doc["n"] = bundle.ts.n;
    doc["blocks"] = bundle.ts.blocks;
    if (bundle.partition) doc["partition"] = bundle.partition->parts;
    if (bundle.coloring)
        doc["coloring"] = {{"r", bundle.coloring->r}, {"colors", bundle.coloring->colors}};
    if (bundle.provenance)
        doc["provenance"] = {{"k", bundle.provenance->k},
                             {"factor_u", bundle.provenance->used_fallback ? "fallback" : "closed-form"}};
    return doc.dump(2) + "\n";
}

Bundle read_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, e.what());
    }
    if (!doc.contains("format") || doc["format"] != "sts-1")
        throw DesignError(fmt::format("unsupported format '{}'",
                                      doc.value("format", std::string("<missing>"))));
    Bundle bundle;
    std::vector<Block> blocks;
    for (const auto& b : doc.at("blocks"))
        blocks.push_back(Block{b.at(0).get<int>(), b.at(1).get<int>(), b.at(2).get<int>()});
    bundle.ts = TripleSystem::make(doc.at("n").get<int>(), std::move(blocks));
    if (doc.contains("partition")) {
        std::array<std::vector<Point>, 3> parts;
        for (int i = 0; i < 3; ++i) parts[i] = doc["partition"].at(i).get<std::vector<Point>>();
        bundle.partition = CrossFreePartition::make(std::move(parts));
        check_partition(bundle.ts, *bundle.partition);
    }
    if (doc.contains("coloring")) {
        bundle.coloring = BlockColoring{doc["coloring"].at("r").get<int>(),
                                        doc["coloring"].at("colors").get<std::vector<int>>()};
        check_coloring(bundle.ts, *bundle.coloring);
    }
    if (doc.contains("provenance")) {
        bundle.provenance = Provenance{doc["provenance"].at("k").get<int>(),
                                       doc["provenance"].at("factor_u") == "fallback"};
    }
    return bundle;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DesignError(fmt::format("cannot open '{}' for writing", path));
    out << content;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DesignError(fmt::format("cannot open '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace crossfree
