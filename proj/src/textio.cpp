#include "lsinf/textio.hpp"

#include "lsinf/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>

namespace lsinf {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long long parse_int(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) throw ParseError("empty integer");
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) throw ParseError("bad integer '" + s + "'");
    for (std::size_t j = k; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw ParseError("bad integer '" + s + "'");
    try {
        return std::stoll(s);
    } catch (...) {
        throw ParseError("integer out of range '" + s + "'");
    }
}

} // namespace

std::string format_partition(const Partition& rho) {
    std::string out;
    for (int k = 0; k < rho.length(); ++k) {
        if (k) out += ',';
        out += std::to_string(rho[k]);
    }
    return out;
}

Partition parse_partition(const std::string& raw) {
    const std::string s = trim(raw);
    if (s.empty()) return {};
    std::vector<int> v;
    for (const std::string& t : split(s, ',')) {
        const long long x = parse_int(t);
        if (x <= 0) throw ParseError("partition parts must be positive");
        v.push_back(static_cast<int>(x));
    }
    for (std::size_t k = 1; k < v.size(); ++k)
        if (v[k] > v[k - 1]) throw ParseError("partition parts must be weakly decreasing");
    return Partition(std::move(v));
}

Rat parse_rat(const std::string& raw) {
    const std::string s = trim(raw);
    const auto parts = split(s, '/');
    if (parts.size() == 1) return Rat(parse_int(parts[0]));
    if (parts.size() != 2) throw ParseError("bad rational '" + s + "'");
    const long long q = parse_int(parts[1]);
    if (q <= 0) throw ParseError("denominator must be positive in '" + s + "'");
    return Rat(parse_int(parts[0]), q);
}

std::string format_half2(int x2) {
    if (x2 % 2 == 0) return std::to_string(x2 / 2);
    return std::to_string(x2) + "/2";
}

std::string format_weight(const Weight& w) {
    std::string out;
    for (int j = 0; j < w.head_size(); ++j) {
        if (j) out += ',';
        out += format_half2(w.c2(j));
    }
    return out + ";" + format_half2(w.tail2());
}

Weight parse_weight(TypeTag tag, const std::string& raw) {
    const std::string s = trim(raw);
    const auto halves = split(s, ';');
    if (halves.size() != 2) throw ParseError("weight needs exactly one ';' in '" + s + "'");
    auto half2 = [&](const std::string& t) {
        const Rat r = parse_rat(t) * 2;
        if (r.denominator() != 1) throw ParseError("weight entries must be half-integers in '" + s + "'");
        return static_cast<int>(r.numerator());
    };
    std::vector<int> head;
    if (!trim(halves[0]).empty())
        for (const std::string& t : split(halves[0], ',')) head.push_back(half2(t));
    const int tail = half2(halves[1]);
    try {
        return Weight(tag, std::move(head), tail);
    } catch (const PreconditionViolated& e) {
        throw ParseError(std::string(e.what()) + " in '" + s + "'");
    }
}

TypeTag parse_type(const std::string& s) {
    const std::string t = trim(s);
    if (t == "b" || t == "B") return TypeTag::B;
    if (t == "c" || t == "C") return TypeTag::C;
    if (t == "d" || t == "D") return TypeTag::D;
    throw ParseError("type must be one of b, c, d");
}

std::string format_path(const LSPath& pi) {
    std::string out = "(";
    for (int u = 0; u < pi.segments(); ++u) {
        if (u) out += '|';
        out += format_weight(pi.dirs()[u]);
    }
    out += " ; ";
    for (std::size_t u = 0; u < pi.breaks().size(); ++u) {
        if (u) out += ',';
        out += to_string(pi.breaks()[u]);
    }
    return out + ")";
}

LSPath parse_path(TypeTag tag, const std::string& raw) {
    const std::string s = trim(raw);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw ParseError("path must be parenthesised");
    const std::string body = s.substr(1, s.size() - 2);
    const auto sp = body.rfind(" ; ");
    if (sp == std::string::npos) throw ParseError("path needs ' ; ' before its break points");
    std::vector<Weight> dirs;
    for (const std::string& t : split(body.substr(0, sp), '|')) dirs.push_back(parse_weight(tag, t));
    std::vector<Rat> br;
    for (const std::string& t : split(body.substr(sp + 3), ',')) br.push_back(parse_rat(t));
    try {
        return LSPath(std::move(dirs), std::move(br));
    } catch (const PreconditionViolated& e) {
        throw ParseError(e.what());
    }
}

std::string format_tensor(const TensorElt& b) { return format_path(b.left) + " (x) " + format_path(b.right); }

std::string format_decomp(const DecompResult& r) {
    std::vector<std::pair<Weight, std::int64_t>> zero, rest;
    for (const auto& e : r.entries) (e.first.tail2() == 0 ? zero : rest).push_back(e);
    std::vector<std::pair<Partition, std::int64_t>> parts;
    bool all_partitions = true;
    for (const auto& [w, k] : zero) {
        try {
            parts.emplace_back(to_partition(w), k);
        } catch (const Error&) {
            all_partitions = false;
        }
    }
    std::vector<std::string> items;
    if (all_partitions) {
        std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() > b.first.size();
            return a.first > b.first;
        });
        for (const auto& [p, k] : parts) items.push_back("(" + format_partition(p) + "):" + std::to_string(k));
    } else {
        rest.insert(rest.begin(), zero.begin(), zero.end());
    }
    std::vector<std::string> tail;
    for (const auto& [w, k] : rest) tail.push_back(format_weight(w) + ":" + std::to_string(k));
    std::sort(tail.begin(), tail.end());
    items.insert(items.end(), tail.begin(), tail.end());
    std::string out;
    for (std::size_t k = 0; k < items.size(); ++k) out += (k ? " " : "") + items[k];
    return out;
}

std::string decomp_json(const DecompResult& r) {
    std::vector<std::pair<std::string, std::int64_t>> rows;
    for (const auto& [w, k] : r.entries) rows.emplace_back(format_weight(w), k);
    std::sort(rows.begin(), rows.end());
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [w, k] : rows) j.push_back({{"weight", w}, {"multiplicity", k}});
    return j.dump(2);
}

std::uint64_t content_hash(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

namespace {

std::string node_id(const std::string& text) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "n%016llx", static_cast<unsigned long long>(content_hash(text)));
    return buf;
}

} // namespace

std::string crystal_dot(const CrystalGraph<LSPath>& g) {
    std::ostringstream o;
    std::vector<std::string> ids;
    o << "digraph crystal {\n";
    for (const LSPath& p : g.elements) {
        const std::string t = format_path(p);
        ids.push_back(node_id(t));
        o << "  " << ids.back() << " [label=\"" << t << "\"];\n";
    }
    for (const auto& [s, i, d] : g.edges) o << "  " << ids[s] << " -> " << ids[d] << " [label=\"" << i << "\"];\n";
    o << "}\n";
    return o.str();
}

std::string crystal_json(const CrystalGraph<LSPath>& g) {
    nlohmann::json j;
    j["elements"] = nlohmann::json::array();
    for (const LSPath& p : g.elements) j["elements"].push_back(format_path(p));
    j["edges"] = nlohmann::json::array();
    for (const auto& [s, i, d] : g.edges) j["edges"].push_back({s, i, d});
    return j.dump(2) + "\n";
}

} // namespace lsinf
