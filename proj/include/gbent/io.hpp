#pragma once

#include <json.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gbent/enumeration.hpp"
#include "gbent/function.hpp"
#include "gbent/groups.hpp"

namespace gbent {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// compact digit-string form of a truth table; legal only for q <= 10
inline std::string digit_string(const GBF& f) {
    if (f.q.q > 10)
        throw std::invalid_argument("digit_string: compact form needs q <= 10");
    std::string s;
    s.reserve(f.size());
    for (int v : f.values) s.push_back(static_cast<char>('0' + v));
    return s;
}

inline std::string values_line(const GBF& f) {
    std::string s;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(f.values[i]);
    }
    return s;
}

/**
 * Function file: header line "n q", then the table either as 2^n
 * space-separated integers (verbose) or as a 2^n-digit string (compact,
 * q <= 10). Index convention is x_1-most-significant throughout.
 */
inline std::string emit_function(const GBF& f, bool compact = true) {
    std::string out = std::to_string(f.n) + " " + std::to_string(f.q.q) + "\n";
    out += (compact && f.q.q <= 10) ? digit_string(f) : values_line(f);
    out.push_back('\n');
    return out;
}

namespace detail {

inline GBF parse_body_token(int n, const QParam& q, const std::string& tok) {
    const size_t N = size_t{1} << n;
    if (q.q > 10)
        throw parse_error("parse_function: compact digit string requires q <= 10");
    if (tok.size() != N)
        throw parse_error("parse_function: digit string has " +
                          std::to_string(tok.size()) + " digits, expected " +
                          std::to_string(N));
    std::vector<int> values(N);
    for (size_t i = 0; i < N; ++i) {
        char ch = tok[i];
        if (ch < '0' || ch > '9')
            throw parse_error("parse_function: non-digit character in table");
        int v = ch - '0';
        if (v >= q.q)
            throw parse_error("parse_function: digit " + std::string(1, ch) +
                              " out of range for q=" + std::to_string(q.q));
        values[i] = v;
    }
    return {n, q, std::move(values)};
}

}  // namespace detail

inline GBF parse_function(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header))
        throw parse_error("parse_function: empty input");
    std::istringstream hs(header);
    int n = 0, qv = 0;
    if (!(hs >> n >> qv))
        throw parse_error("parse_function: malformed header, expected \"n q\"");
    std::string extra;
    if (hs >> extra)
        throw parse_error("parse_function: trailing tokens in header");
    if (n < 1 || n > 24)
        throw parse_error("parse_function: n out of range");
    if (qv < 2 || qv % 2 != 0)
        throw parse_error("parse_function: q must be even and >= 2");
    const QParam q(qv);
    const size_t N = size_t{1} << n;

    std::vector<std::string> toks;
    std::string tok;
    while (in >> tok) toks.push_back(tok);
    if (toks.empty())
        throw parse_error("parse_function: missing value table");
    if (toks.size() == 1 && toks[0].size() == N && N > 1)
        return detail::parse_body_token(n, q, toks[0]);
    if (toks.size() != N)
        throw parse_error("parse_function: expected " + std::to_string(N) +
                          " values, got " + std::to_string(toks.size()));
    std::vector<int> values(N);
    for (size_t i = 0; i < N; ++i) {
        try {
            size_t used = 0;
            values[i] = std::stoi(toks[i], &used);
            if (used != toks[i].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw parse_error("parse_function: bad integer \"" + toks[i] + "\"");
        }
        if (values[i] < 0 || values[i] >= qv)
            throw parse_error("parse_function: value " + toks[i] +
                              " out of range for q=" + std::to_string(qv));
    }
    return {n, q, std::move(values)};
}

/**
 * List file: header "n q", then one function per line (compact digit string
 * for q <= 10, space-separated values otherwise).
 */
inline std::string emit_function_list(const std::vector<GBF>& fns) {
    if (fns.empty()) throw std::invalid_argument("emit_function_list: empty list");
    std::string out =
        std::to_string(fns[0].n) + " " + std::to_string(fns[0].q.q) + "\n";
    for (const auto& f : fns) {
        if (f.n != fns[0].n || f.q.q != fns[0].q.q)
            throw std::invalid_argument("emit_function_list: mixed (n,q)");
        out += (f.q.q <= 10) ? digit_string(f) : values_line(f);
        out.push_back('\n');
    }
    return out;
}

inline std::vector<GBF> parse_function_list(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header))
        throw parse_error("parse_function_list: empty input");
    std::istringstream hs(header);
    int n = 0, qv = 0;
    if (!(hs >> n >> qv))
        throw parse_error("parse_function_list: malformed header");
    std::vector<GBF> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        out.push_back(parse_function(header + "\n" + line + "\n"));
    }
    if (out.empty()) throw parse_error("parse_function_list: no functions");
    return out;
}

inline const char* duality_name(DualityKind k) {
    switch (k) {
        case DualityKind::NotGbent: return "not-gbent";
        case DualityKind::GbentNonRegular: return "gbent-non-regular";
        case DualityKind::Regular: return "regular";
        case DualityKind::SelfDual: return "self-dual";
        case DualityKind::AntiSelfDual: return "anti-self-dual";
    }
    return "?";
}

inline nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json found = nlohmann::json::array();
    for (const auto& f : r.found)
        found.push_back(r.q <= 10 ? digit_string(f) : values_line(f));
    return {
        {"n", r.n},
        {"q", r.q},
        {"kind", kind_name(r.kind)},
        {"count", r.found.size()},
        {"found", std::move(found)},
        {"candidates_scanned", r.candidates_scanned},
        {"elapsed_ms", r.elapsed_ms},
    };
}

inline nlohmann::json to_json(const SpectrumReport& r) {
    nlohmann::json observed = nlohmann::json::array();
    for (const auto& [d, cnt] : r.observed)
        observed.push_back({{"distance", d}, {"pairs", cnt}});
    nlohmann::json attained = nlohmann::json::array();
    for (const auto& [d, ok] : r.attained)
        attained.push_back({{"distance", d}, {"attained", ok}});
    nlohmann::json j{
        {"metric", r.metric == Metric::Hamming ? "hamming" : "lee"},
        {"n", r.n},
        {"q", r.q},
        {"class", "mm"},
        {"sd_count", r.sd_count},
        {"asd_count", r.asd_count},
        {"observed", std::move(observed)},
        {"predicted", r.predicted},
        {"attained", std::move(attained)},
        {"contained", r.contained},
        {"min_nonzero", r.min_nonzero},
        {"mixed_distances", std::vector<long long>(r.mixed_distances.begin(),
                                                   r.mixed_distances.end())},
        {"same_kind_distances", std::vector<long long>(r.same_kind_distances.begin(),
                                                       r.same_kind_distances.end())},
    };
    if (r.metric == Metric::Lee) j["min_nonzero_expected"] = r.min_nonzero_expected;
    return j;
}

inline nlohmann::json to_json(const AffineScanReport& r) {
    return {{"n", r.n},       {"q", r.q},
            {"total", r.total}, {"gbent", r.gbent},
            {"self_dual", r.self_dual}};
}

inline nlohmann::json to_json(const UpperBoundReport& r) {
    return {{"n", r.n},
            {"k", r.k},
            {"count_2k", r.count_2k},
            {"count_2", r.count_2},
            {"bound", r.bound},
            {"holds", r.holds}};
}

/// text table in the layout of the classification table: representative, size, total
inline std::string orbit_table(const std::vector<Orbit>& orbits, int q) {
    std::string out = "Representative from equivalence class | Size\n";
    size_t total = 0;
    for (const auto& o : orbits) {
        out += (q <= 10 ? digit_string(o.canonical) : values_line(o.canonical));
        out += " | " + std::to_string(o.size) + "\n";
        total += o.size;
    }
    out += "Total | " + std::to_string(total) + "\n";
    return out;
}

inline nlohmann::json to_json(const std::vector<Orbit>& orbits, int q) {
    nlohmann::json arr = nlohmann::json::array();
    size_t total = 0;
    for (const auto& o : orbits) {
        arr.push_back({{"representative",
                        q <= 10 ? digit_string(o.canonical) : values_line(o.canonical)},
                       {"size", o.size}});
        total += o.size;
    }
    return {{"orbits", std::move(arr)}, {"count", orbits.size()}, {"total", total}};
}

}  // namespace gbent
