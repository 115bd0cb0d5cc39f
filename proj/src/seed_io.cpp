#include "gca/seed_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gca {

namespace {

using nlohmann::json;

std::pair<int, int> parse_zkey(const std::string& key) {
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("z/a key must look like \"i,s\": " + key);
    const int i = std::stoi(key.substr(0, comma));
    const int s = std::stoi(key.substr(comma + 1));
    return {i, s};
}

ExchangeData exchange_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    const auto rows = j.at("B");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("B must be an n x n matrix");
    IntMatrix b(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("B must be an n x n matrix");
        for (int k = 0; k < n; ++k) b(i, k) = rows[i][k].get<std::int64_t>();
    }
    auto r = j.at("R").get<std::vector<std::int64_t>>();
    auto d = j.at("d").get<std::vector<std::int64_t>>();
    return ExchangeData(std::move(b), std::move(r), std::move(d));
}

std::vector<std::vector<double>> indexed_block_from_json(const json& j, const char* field,
                                                         const ExchangeData& ex) {
    std::vector<std::vector<double>> block(ex.n);
    for (int i = 0; i < ex.n; ++i) block[i].assign(ex.d[i] - 1, 0.0);
    if (!j.contains(field)) return block;
    for (const auto& [key, value] : j.at(field).items()) {
        const auto [i, s] = parse_zkey(key);
        if (i < 1 || i > ex.n || s < 1 || s > ex.d[i - 1] - 1)
            throw std::invalid_argument(std::string(field) + " key out of range: " + key);
        block[i - 1][s - 1] = value.get<double>();
    }
    return block;
}

json indexed_block_to_json(const std::vector<std::vector<double>>& block) {
    json out = json::object();
    for (size_t i = 0; i < block.size(); ++i)
        for (size_t s = 0; s < block[i].size(); ++s)
            out[std::to_string(i + 1) + "," + std::to_string(s + 1)] = block[i][s];
    return out;
}

json seed_to_json(const Seed& s) {
    json j;
    j["n"] = s.ex.n;
    json rows = json::array();
    for (int i = 0; i < s.ex.n; ++i) {
        json row = json::array();
        for (int k = 0; k < s.ex.n; ++k) row.push_back(s.ex.b(i, k));
        rows.push_back(std::move(row));
    }
    j["B"] = std::move(rows);
    j["R"] = s.ex.r;
    j["d"] = s.ex.d;
    j["y"] = s.y;
    j["z"] = indexed_block_to_json(s.z);
    return j;
}

Seed seed_from_json(const json& j) {
    auto ex = exchange_from_json(j);
    auto y = j.at("y").get<std::vector<double>>();
    auto z = indexed_block_from_json(j, "z", ex);
    return Seed(std::move(ex), std::move(y), std::move(z));
}

} // namespace

Seed read_seed(const std::string& json_text) {
    return seed_from_json(json::parse(json_text));
}

std::string write_seed(const Seed& s, int indent) {
    return seed_to_json(s).dump(indent);
}

GroupoidSeed read_groupoid_seed(const std::string& json_text) {
    const json j = json::parse(json_text);
    Seed base = seed_from_json(j);
    std::vector<double> q(base.ex.n, 0.0);
    if (j.contains("q")) q = j.at("q").get<std::vector<double>>();
    auto a = indexed_block_from_json(j, "a", base.ex);
    return GroupoidSeed(std::move(base), std::move(q), std::move(a));
}

std::string write_groupoid_seed(const GroupoidSeed& g, int indent) {
    json j = seed_to_json(g.base);
    j["q"] = g.q;
    j["a"] = indexed_block_to_json(g.a);
    return j.dump(indent);
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

Seed read_seed_file(const std::string& path) { return read_seed(slurp(path)); }

GroupoidSeed read_groupoid_seed_file(const std::string& path) {
    return read_groupoid_seed(slurp(path));
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent) {
    json arr = json::array();
    for (const auto& r : reports) {
        json j;
        j["name"] = r.name;
        j["lhs"] = r.lhs;
        j["rhs"] = r.rhs;
        j["deviation"] = r.deviation;
        j["tolerance"] = r.tolerance;
        j["pass"] = r.pass;
        if (!r.note.empty()) j["note"] = r.note;
        arr.push_back(std::move(j));
    }
    return arr.dump(indent);
}

} // namespace gca
