#pragma once

// JSON encodings of the library's values. Parsers throw flagrsk::Error
// naming the offending field.

#include <string>
#include <vector>

#include <json.hpp>

#include "plane_partition.hpp"

namespace flagrsk {

using Json = nlohmann::json;

namespace detail {

inline const Json& field(const Json& j, const std::string& name) {
    require(j.is_object(), "expected a JSON object holding field '" + name + "'");
    auto it = j.find(name);
    require(it != j.end(), "missing field '" + name + "'");
    return *it;
}

inline std::vector<int> int_array(const Json& j, const std::string& what) {
    require(j.is_array(), "field '" + what + "' must be an array of integers");
    std::vector<int> out;
    for (const Json& x : j) {
        require(x.is_number_integer(), "field '" + what + "' must be an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

inline std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& what) {
    require(j.is_array(), "field '" + what + "' must be an array of integer arrays");
    std::vector<std::vector<int>> out;
    for (const Json& r : j) out.push_back(int_array(r, what));
    return out;
}

}  // namespace detail

inline Json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const Json& j, const std::string& what = "partition") {
    try {
        return Partition(detail::int_array(j, what));
    } catch (const Error& e) {
        throw Error("field '" + what + "': " + e.what());
    }
}

inline Json to_json(const SparseMatrix& a) {
    std::vector<std::vector<long long>> rows(a.max_row(), std::vector<long long>(a.max_col(), 0));
    for (auto& [k, v] : a.entries()) rows[k.first - 1][k.second - 1] = v;
    return rows;
}

inline SparseMatrix matrix_from_json(const Json& j, const std::string& what = "matrix") {
    require(j.is_array(), "field '" + what + "' must be an array of rows");
    std::vector<std::vector<long long>> rows;
    for (const Json& r : j) {
        require(r.is_array(), "field '" + what + "' must be an array of rows");
        rows.emplace_back();
        for (const Json& x : r) {
            require(x.is_number_integer() && x.get<long long>() >= 0,
                    "field '" + what + "' entries must be nonnegative integers");
            rows.back().push_back(x.get<long long>());
        }
    }
    return SparseMatrix::from_dense(rows);
}

inline Json to_json(const AntiTableau& t) {
    Json j;
    j["alphabet"] = alphabet_name(t.alphabet());
    j["rows_bottom_up"] = t.rows_bottom_up();
    j["shape"] = to_json(t.outer_shape());
    if (t.inner_shape().size() > 0) j["inner"] = to_json(t.inner_shape());
    return j;
}

inline Alphabet alphabet_from_name(const std::string& s) {
    for (Alphabet a : {Alphabet::B, Alphabet::Bpos, Alphabet::Bneg, Alphabet::BnegDual})
        if (alphabet_name(a) == s) return a;
    throw Error("field 'alphabet': unknown alphabet '" + s + "'");
}

inline AntiTableau anti_from_json(const Json& j, Alphabet expected, const std::string& what) {
    try {
        if (j.contains("alphabet")) {
            require(j["alphabet"].is_string(), "field 'alphabet' must be a string");
            require(alphabet_from_name(j["alphabet"].get<std::string>()) == expected,
                    std::string("field 'alphabet' must be ") + alphabet_name(expected));
        }
        Partition inner;
        if (j.contains("inner")) inner = partition_from_json(j["inner"], "inner");
        AntiTableau t = AntiTableau::from_rows(expected, detail::int_matrix(detail::field(j, "rows_bottom_up"), "rows_bottom_up"), inner);
        require(t.is_semistandard(), "tableau is not semistandard");
        return t;
    } catch (const Error& e) {
        throw Error("field '" + what + "': " + e.what());
    }
}

inline Json to_json(const NormalTableau& t) {
    Json j;
    j["alphabet"] = alphabet_name(t.alphabet());
    j["rows"] = t.rows();
    j["shape"] = to_json(t.shape());
    return j;
}

inline NormalTableau normal_from_json(const Json& j, const std::string& what) {
    try {
        return NormalTableau(Alphabet::Bpos, detail::int_matrix(detail::field(j, "rows"), "rows"));
    } catch (const Error& e) {
        throw Error("field '" + what + "': " + e.what());
    }
}

inline Json to_json(const RskPair& pq) { return {{"P", to_json(pq.p)}, {"Q", to_json(pq.q)}}; }

inline Json to_json(const BiTableau& b) {
    return {{"S", to_json(b.s)}, {"T", to_json(b.t)}, {"shape", to_json(b.shape())}};
}

inline BiTableau bitableau_from_json(const Json& j) {
    return BiTableau(anti_from_json(detail::field(j, "S"), Alphabet::BnegDual, "S"),
                     anti_from_json(detail::field(j, "T"), Alphabet::Bpos, "T"));
}

inline Json to_json(const VermaTriple& v) {
    return {{"matrix", to_json(v.a)},
            {"s_neg", to_json(v.s_neg)},
            {"s_pos", to_json(v.s_pos)},
            {"mu", to_json(v.mu())},
            {"nu", to_json(v.nu())}};
}

inline VermaTriple triple_from_json(const Json& j) {
    return VermaTriple(matrix_from_json(detail::field(j, "matrix")),
                       anti_from_json(detail::field(j, "s_neg"), Alphabet::BnegDual, "s_neg"),
                       normal_from_json(detail::field(j, "s_pos"), "s_pos"));
}

inline std::string sign_char(Sign s) { return s == Sign::Plus ? "+" : s == Sign::Minus ? "-" : "."; }

/// Signs listed sigma_1 first.
inline Json to_json(const SignSequence& s) {
    Json j = Json::array();
    for (Sign x : s) j.push_back(sign_char(x));
    return j;
}

inline Json to_json(const Weight& w) {
    Json eps = Json::object();
    for (auto [k, c] : w.eps_coeffs()) eps[std::to_string(k)] = c;
    return {{"Lambda0", w.lambda0()}, {"eps", eps}};
}

/// Sorted pairs [exponents, "coefficient"], plus the variable names.
inline Json to_json(const TruncatedSeries& s, const std::vector<std::string>& names) {
    Json terms = Json::array();
    for (auto& [m, c] : s.terms()) terms.push_back(Json::array({m, c.str()}));
    return {{"vars", names}, {"cap", s.cap()}, {"terms", terms}};
}

inline Json to_json(const std::vector<BigInt>& coeffs) {
    Json j = Json::array();
    for (auto& c : coeffs) j.push_back(c.str());
    return j;
}

inline Json to_json(const PlanePartition& p) { return p.rows(); }

inline PlanePartition plane_partition_from_json(const Json& j, const std::string& what = "plane_partition") {
    try {
        return PlanePartition(detail::int_matrix(j, what));
    } catch (const Error& e) {
        throw Error("field '" + what + "': " + e.what());
    }
}

inline Json to_json(const ReducedWord& w) { return w.indices; }

}  // namespace flagrsk
