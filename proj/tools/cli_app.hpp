#pragma once

// flagrsk command-line front end. run_cli() is kept separate from main so the
// tests can drive it in-process.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <flagrsk/flagrsk.hpp>
#include <flagrsk/json_io.hpp>

namespace flagrsk::cli {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Raised for bad flag combinations; maps to exit code 2.
struct UsageError : Error {
    using Error::Error;
};

struct Io {
    std::ostream& out;
    std::ostream& err;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read --file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("field '" + what + "': malformed JSON: " + e.what());
    }
}

/// The inline value of `flag`, or else the contents of --file.
inline Json json_input(const std::string& inline_text, const std::string& file, const std::string& what) {
    if (!inline_text.empty()) return parse_json(inline_text, what);
    if (!file.empty()) return parse_json(read_file(file), what);
    throw UsageError("missing --" + what + " (inline JSON or --file)");
}

/// "2,1", "[2,1]" or "" (the empty partition).
inline Partition parse_shape(const std::string& s, const std::string& what = "shape") {
    if (!s.empty() && s.front() == '[') return partition_from_json(parse_json(s, what), what);
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("field '" + what + "': not an integer: '" + tok + "'");
        }
    }
    try {
        return Partition(parts);
    } catch (const Error& e) {
        throw UsageError("field '" + what + "': " + e.what());
    }
}

inline Dir parse_dir(const std::string& s) {
    if (s == "e" || s == "raise") return Dir::Raise;
    if (s == "f" || s == "lower") return Dir::Lower;
    throw UsageError("field 'dir': expected e|f|raise|lower, got '" + s + "'");
}

inline void emit(Io io, const Json& j) { io.out << j.dump(2) << "\n"; }

inline std::string matrix_text(const SparseMatrix& a) {
    if (a.is_zero()) return "0\n";
    std::size_t width = 1;
    for (auto& [k, v] : a.entries()) width = std::max(width, std::to_string(v).size());
    std::string out;
    for (int i = 1; i <= a.max_row(); ++i) {
        for (int j = 1; j <= a.max_col(); ++j) {
            const std::string c = std::to_string(a.at(i, j));
            if (j > 1) out += ' ';
            out += std::string(width - c.size(), ' ') + c;
        }
        out += "\n";
    }
    return out;
}

inline Json matrix_list(const std::set<SparseMatrix>& s) {
    Json j = Json::array();
    for (auto& a : s) j.push_back(to_json(a));
    return j;
}

inline GrassmannianElement element(const std::string& shape, bool hat, int epsilon) {
    const Partition lam = parse_shape(shape);
    if (!hat) return GrassmannianElement(lam);
    if (!lam.is_self_conjugate()) throw UsageError("field 'shape': --hat needs a self-conjugate shape");
    if (epsilon != 1 && epsilon != 2) throw UsageError("field 'epsilon': must be 1 or 2");
    return GrassmannianElement(lam, Group::Hat, epsilon);
}

inline void positive(long long v, const std::string& name) {
    if (v < 0) throw UsageError("field '" + name + "': must be nonnegative");
}

inline Json flag_json(const FlagData& f) {
    return {{"alpha", f.alpha}, {"beta", f.beta}, {"phi", f.phi}, {"psi", f.psi}, {"d", f.d}};
}

inline Json series_pair_json(const SeriesPair& p, const std::vector<std::string>& names) {
    return {{"status", p.equal() ? "OK" : "FAIL"}, {"lhs", to_json(p.lhs, names)}, {"rhs", to_json(p.rhs, names)}};
}

inline void pretty_series_pair(Io io, const SeriesPair& p, const std::vector<std::string>& names) {
    io.out << (p.equal() ? "OK" : "FAIL") << "\n";
    io.out << "lhs: " << p.lhs.to_string(names) << "\n";
    io.out << "rhs: " << p.rhs.to_string(names) << "\n";
}

inline std::string coeff_line(const std::vector<BigInt>& c) {
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + c[i].str();
    return out;
}

/// v_i -> color from GRAPH_DOT_COLORS: "i=color" pairs, or a plain list
/// assigned to the window's indices in order.
inline std::map<int, std::string> dot_colors(const IndexWindow& w, const char* env) {
    static const std::vector<std::string> palette = {"red", "blue", "darkgreen", "orange", "purple",
                                                     "brown", "magenta", "cyan", "gray"};
    std::map<int, std::string> out;
    int pos = 0;
    for (int i = w.lo; i <= w.hi; ++i) out[i] = palette[static_cast<std::size_t>(i - w.lo) % palette.size()];
    if (!env) return out;
    std::stringstream ss(env);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        const auto eq = tok.find('=');
        if (eq == std::string::npos) {
            if (w.lo + pos <= w.hi) out[w.lo + pos] = tok;
            ++pos;
            continue;
        }
        try {
            out[std::stoi(tok.substr(0, eq))] = tok.substr(eq + 1);
        } catch (const std::exception&) {
            throw UsageError("GRAPH_DOT_COLORS: bad entry '" + tok + "'");
        }
    }
    return out;
}

inline std::string dot_label(const SparseMatrix& a) {
    std::string t = matrix_text(a);
    std::string out;
    for (char c : t) out += c == '\n' ? std::string("\\n") : std::string(1, c);
    return out;
}

inline int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    Io io{out, err};
    CLI::App app{"Crystal, RSK, Demazure and plane-partition computations", "flagrsk"};
    app.require_subcommand(1);
    app.fallthrough();

    bool pretty = false;
    int jobs = 1;
    std::string file;
    app.add_flag("--pretty", pretty, "Human-readable text instead of JSON");
    app.add_option("--jobs", jobs, "Worker threads for enumerations")->check(CLI::PositiveNumber);
    app.add_option("--file", file, "Read the main JSON input from a file");

    std::function<int()> action;

    // rsk
    auto* rsk = app.add_subcommand("rsk", "RSK correspondence kappa")->require_subcommand(1);
    std::string matrix_s, pair_s;
    {
        auto* fwd = rsk->add_subcommand("forward", "Matrix to (P, Q)");
        fwd->add_option("--matrix", matrix_s, "Matrix as JSON rows");
        fwd->callback([&] {
            action = [&] {
                const SparseMatrix a = matrix_from_json(json_input(matrix_s, file, "matrix"));
                const RskPair pq = kappa(a);
                if (pretty) {
                    io.out << "P:\n" << flagrsk::pretty(pq.p) << "Q:\n" << flagrsk::pretty(pq.q);
                } else {
                    Json j = to_json(pq);
                    j["shape"] = to_json(pq.p.outer_shape());
                    emit(io, j);
                }
                return kOk;
            };
        });
        auto* inv = rsk->add_subcommand("inverse", "(P, Q) to matrix");
        inv->add_option("--pair", pair_s, "{\"P\": tableau, \"Q\": tableau}");
        inv->callback([&] {
            action = [&] {
                const Json j = json_input(pair_s, file, "pair");
                const BiTableau b(anti_from_json(detail::field(j, "P"), Alphabet::BnegDual, "P"),
                                  anti_from_json(detail::field(j, "Q"), Alphabet::Bpos, "Q"));
                const SparseMatrix a = kappa_inverse(b.s, b.t);
                if (pretty)
                    io.out << matrix_text(a);
                else
                    emit(io, {{"matrix", to_json(a)}});
                return kOk;
            };
        });
    }

    // crystal
    auto* crystal = app.add_subcommand("crystal", "Kashiwara operators and closures")->require_subcommand(1);
    std::string kind = "matrix", element_s, dir_s = "f";
    int index = 0, epsilon = 1, lo = 0, hi = 0;
    long long sum_bound = -1;
    {
        auto* ap = crystal->add_subcommand("apply", "Apply e_i or f_i to one element");
        ap->add_option("--kind", kind, "matrix|bitableau|triple|folded")
            ->check(CLI::IsMember({"matrix", "bitableau", "triple", "folded"}));
        ap->add_option("--element", element_s, "Element as JSON");
        ap->add_option("--index,-i", index, "Operator index i")->required();
        ap->add_option("--dir", dir_s, "e|f");
        ap->add_option("--epsilon", epsilon, "Folding parameter for --kind folded");
        ap->callback([&] {
            action = [&] {
                const Json j = json_input(element_s, file, "element");
                const Dir d = parse_dir(dir_s);
                Json res;
                std::string text;
                Weight wt;
                long long e = 0, p = 0;
                if (kind == "matrix") {
                    const SparseMatrix a = matrix_from_json(j, "element");
                    const auto ep = weight_eps_phi(a, index);
                    wt = ep.wt, e = ep.eps, p = ep.phi;
                    const auto r = matrix_apply(a, index, d);
                    res = r ? to_json(*r) : Json();
                    text = r ? matrix_text(*r) : "0\n";
                } else if (kind == "bitableau") {
                    const BiTableau b = bitableau_from_json(j);
                    const auto ep = bt_eps_phi(b, index);
                    wt = ep.wt, e = ep.eps, p = ep.phi;
                    const auto r = bt_apply(b, index, d);
                    res = r ? to_json(*r) : Json();
                    text = r ? "S:\n" + flagrsk::pretty(r->s) + "T:\n" + flagrsk::pretty(r->t) : "0\n";
                } else if (kind == "triple") {
                    const VermaTriple v = triple_from_json(j);
                    const auto ep = triple_eps_phi(v, index);
                    wt = ep.wt, e = ep.eps, p = ep.phi;
                    const auto r = triple_apply(v, index, d);
                    res = r ? to_json(*r) : Json();
                    text = r ? matrix_text(r->a) + "s_neg:\n" + flagrsk::pretty(r->s_neg) + "s_pos:\n" +
                                   flagrsk::pretty(r->s_pos)
                             : "0\n";
                } else {
                    const SparseMatrix a = matrix_from_json(j, "element");
                    if (!FoldedMatrix::valid(a, epsilon))
                        throw UsageError("field 'element': not symmetric with diagonal divisible by epsilon");
                    if (index < 0) throw UsageError("field 'index': folded operators use i >= 0");
                    const auto r = folded_apply(FoldedMatrix(a, epsilon), index, d);
                    wt = matrix_weight(a);
                    res = r ? to_json(r->base) : Json();
                    text = r ? matrix_text(r->base) : "0\n";
                    if (pretty) {
                        io.out << text;
                    } else {
                        emit(io, {{"result", res}, {"weight", to_json(wt)}});
                    }
                    return kOk;
                }
                if (pretty)
                    io.out << text << "eps=" << e << " phi=" << p << " wt=" << wt.to_string() << "\n";
                else
                    emit(io, {{"result", res}, {"eps", e}, {"phi", p}, {"weight", to_json(wt)}});
                return kOk;
            };
        });

        auto* cl = crystal->add_subcommand("closure", "Matrices reachable from the zero matrix");
        cl->add_option("--sum-bound", sum_bound, "Bound on the entry sum")->required();
        cl->add_option("--lo", lo, "Smallest operator index")->required();
        cl->add_option("--hi", hi, "Largest operator index")->required();
        cl->callback([&] {
            action = [&] {
                positive(sum_bound, "sum-bound");
                if (lo > hi) throw UsageError("field 'lo': must not exceed --hi");
                const auto s = closure_from_zero(sum_bound, IndexWindow{lo, hi}, jobs);
                if (pretty) {
                    io.out << s.size() << " matrices\n";
                    for (auto& a : s) io.out << matrix_text(a) << "\n";
                } else {
                    emit(io, {{"count", s.size()}, {"elements", matrix_list(s)}});
                }
                return kOk;
            };
        });
    }

    // demazure
    auto* dem = app.add_subcommand("demazure", "Demazure crystals M_w")->require_subcommand(1);
    std::string shape_s, word_s;
    bool hat = false;
    int size_bound = -1;
    std::optional<int> n_opt;
    {
        auto* mem = dem->add_subcommand("membership", "Is A in M_w?");
        mem->add_option("--shape", shape_s, "lambda(w), e.g. 2,1")->required();
        mem->add_option("--matrix", matrix_s, "Matrix as JSON rows");
        mem->add_flag("--hat", hat, "Folded group; needs a self-conjugate shape");
        mem->add_option("--epsilon", epsilon, "1 or 2");
        mem->callback([&] {
            action = [&] {
                const GrassmannianElement w = element(shape_s, hat, epsilon);
                const SparseMatrix a = matrix_from_json(json_input(matrix_s, file, "matrix"));
                bool in = in_Mw(a, w);
                if (hat) in = in && FoldedMatrix::valid(a, epsilon);
                const Partition ls = lambda_of_support(a.support());
                if (pretty)
                    io.out << (in ? "member" : "not a member") << "; lambda(supp A) = " << to_string(ls) << "\n";
                else
                    emit(io, {{"member", in}, {"lambda_supp", to_json(ls)}, {"shape", to_json(w.shape)}});
                return kOk;
            };
        });

        auto* gen = dem->add_subcommand("generate", "f-closure of the zero matrix along a reduced word");
        gen->add_option("--shape", shape_s, "lambda(w)")->required();
        gen->add_option("--sum-bound", sum_bound, "Bound on the entry sum")->required();
        gen->add_option("--word", word_s, "Reduced word [a_l,...,a_1] (default: row reading)");
        gen->add_flag("--hat", hat, "Folded group");
        gen->add_option("--epsilon", epsilon, "1 or 2");
        gen->callback([&] {
            action = [&] {
                positive(sum_bound, "sum-bound");
                const GrassmannianElement w = element(shape_s, hat, epsilon);
                ReducedWord word = hat ? hat_reduced_word(w) : reduced_word(w);
                if (!word_s.empty()) word.indices = detail::int_array(parse_json(word_s, "word"), "word");
                const auto s = hat ? hat_generate(word, epsilon, sum_bound, jobs) : generate_Mw(word, sum_bound, jobs);
                if (pretty) {
                    io.out << s.size() << " matrices\n";
                    for (auto& a : s) io.out << matrix_text(a) << "\n";
                } else {
                    emit(io, {{"word", to_json(word)}, {"count", s.size()}, {"elements", matrix_list(s)}});
                }
                return kOk;
            };
        });

        auto* tw = dem->add_subcommand("tw", "Flagged bitableaux T_w (or B_w(n Lambda_0) with --n)");
        tw->add_option("--shape", shape_s, "lambda(w)")->required();
        tw->add_option("--size-bound", size_bound, "Bound on |nu|")->required();
        tw->add_option("--n", n_opt, "Level n: restrict to nu_1 <= n");
        tw->callback([&] {
            action = [&] {
                positive(size_bound, "size-bound");
                const GrassmannianElement w = element(shape_s, false, 1);
                const auto s = enumerate_Tw(w, size_bound, n_opt);
                const FlagData f = flag_data(w.shape);
                if (pretty) {
                    io.out << s.size() << " bitableaux\n";
                    for (auto& b : s) io.out << "S:\n" << flagrsk::pretty(b.s) << "T:\n" << flagrsk::pretty(b.t) << "\n";
                } else {
                    Json el = Json::array();
                    for (auto& b : s) el.push_back(to_json(b));
                    emit(io, {{"flag", flag_json(f)}, {"count", s.size()}, {"elements", el}});
                }
                return kOk;
            };
        });
    }

    // verify
    auto* ver = app.add_subcommand("verify", "Identity checks; exit 1 on failure")->require_subcommand(1);
    int vars = 0, cap = -1;
    {
        auto* ca = ver->add_subcommand("cauchy", "Flagged Cauchy identity");
        ca->add_option("--shape", shape_s, "lambda(w)")->required();
        ca->add_option("--vars", vars, "Variables per alphabet")->required();
        ca->add_option("--cap", cap, "Total degree cap")->required();
        ca->add_flag("--hat", hat, "Symmetric version");
        ca->add_option("--epsilon", epsilon, "1 or 2");
        ca->callback([&] {
            action = [&] {
                positive(cap, "cap");
                const GrassmannianElement w = element(shape_s, hat, epsilon);
                const SeriesPair p = hat ? hat_cauchy_sides(w, epsilon, vars, cap) : cauchy_sides(w, vars, cap);
                const auto names = hat ? indexed_names("z", vars) : xy_names(vars, vars);
                if (pretty)
                    pretty_series_pair(io, p, names);
                else
                    emit(io, series_pair_json(p, names));
                return p.equal() ? kOk : kVerifyFailed;
            };
        });

        auto* dc = ver->add_subcommand("demazure-char", "Demazure character against enumeration");
        dc->add_option("--shape", shape_s, "lambda(w)")->required();
        dc->add_option("--n", n_opt, "Level n")->required();
        dc->add_option("--vars", vars, "Variables per alphabet")->required();
        dc->add_flag("--hat", hat, "Symmetric version");
        dc->add_option("--epsilon", epsilon, "1 or 2");
        dc->callback([&] {
            action = [&] {
                const int n = *n_opt;
                if (n < 1) throw UsageError("field 'n': must be positive");
                const GrassmannianElement w = element(shape_s, hat, epsilon);
                if (hat) {
                    const SeriesPair p = hat_demazure_character_sides(w, epsilon, n, vars);
                    const auto names = indexed_names("z", vars);
                    if (pretty)
                        pretty_series_pair(io, p, names);
                    else
                        emit(io, series_pair_json(p, names));
                    return p.equal() ? kOk : kVerifyFailed;
                }
                const SeriesPair p = demazure_character_sides(w, n, vars);
                const FlagData f = flag_data(w.shape);
                const auto bw = enumerate_Bw(w, n, n * f.d);
                const WeightPolynomial ch = character(bw, [](const BiTableau& b) { return b.weight(); });
                const WeightPolynomial d =
                    demazure_word(WeightPolynomial::monomial(Weight::Lambda0(n)), reduced_word(w))
                        .shifted(Weight::Lambda0(-n));
                const bool enum_ok = ch == d;
                const bool ok = p.equal() && enum_ok;
                const auto names = xy_names(vars, vars);
                if (pretty) {
                    pretty_series_pair(io, p, names);
                    io.out << "enumeration of B_w(n Lambda_0): " << bw.size() << " elements, "
                           << (enum_ok ? "matches" : "differs") << "\n";
                } else {
                    Json j = series_pair_json(p, names);
                    j["status"] = ok ? "OK" : "FAIL";
                    j["enumeration"] = {{"count", bw.size()}, {"matches", enum_ok}};
                    emit(io, j);
                }
                return ok ? kOk : kVerifyFailed;
            };
        });

        auto* mm = ver->add_subcommand("macmahon", "Plane-partition counts against MacMahon's product");
        mm->add_option("--cap", cap, "Norm bound")->required();
        mm->add_option("--n", n_opt, "Bound on the largest part");
        mm->callback([&] {
            action = [&] {
                positive(cap, "cap");
                const Family f = n_opt ? Family::bounded(*n_opt) : Family::all();
                const auto lhs = norm_generating_function(f, cap);
                const auto rhs = macmahon_product(cap, n_opt);
                const bool ok = lhs == rhs;
                if (pretty)
                    io.out << (ok ? "OK" : "FAIL") << "\nenumeration: " << coeff_line(lhs)
                           << "\nproduct:     " << coeff_line(rhs) << "\n";
                else
                    emit(io, {{"status", ok ? "OK" : "FAIL"}, {"enumeration", to_json(lhs)}, {"product", to_json(rhs)}});
                return ok ? kOk : kVerifyFailed;
            };
        });

        auto* sy = ver->add_subcommand("symmetric", "Folded closure and image characterizations");
        sy->add_option("--shape", shape_s, "Self-conjugate lambda(w)")->required();
        sy->add_option("--epsilon", epsilon, "1 or 2")->required();
        sy->add_option("--sum-bound", sum_bound, "Bound on the entry sum")->required();
        sy->add_option("--cap", cap, "Also check the symmetric Cauchy identity to this degree");
        sy->add_option("--vars", vars, "Variables for the Cauchy check");
        sy->callback([&] {
            action = [&] {
                positive(sum_bound, "sum-bound");
                const GrassmannianElement w = element(shape_s, true, epsilon);
                const auto gen = hat_generate(w, sum_bound, jobs);
                const bool closure_ok = gen == hat_characterize(w, epsilon, sum_bound);
                std::set<AntiTableau> img;
                for (auto& a : gen) img.insert(kappa(a).q);
                const bool image_ok = img == hat_enumerate_image(w, epsilon, static_cast<int>(sum_bound));
                bool ok = closure_ok && image_ok;
                Json j = {{"closure", {{"count", gen.size()}, {"matches", closure_ok}}},
                          {"image", {{"count", img.size()}, {"matches", image_ok}}}};
                std::optional<SeriesPair> cp;
                if (cap >= 0) {
                    if (vars <= 0) throw UsageError("field 'vars': required with --cap");
                    cp = hat_cauchy_sides(w, epsilon, vars, cap);
                    ok = ok && cp->equal();
                    j["cauchy"] = series_pair_json(*cp, indexed_names("z", vars));
                }
                j["status"] = ok ? "OK" : "FAIL";
                if (pretty) {
                    io.out << (ok ? "OK" : "FAIL") << "\nclosure: " << gen.size() << (closure_ok ? " match" : " differ")
                           << "\nimage: " << img.size() << (image_ok ? " match" : " differ") << "\n";
                    if (cp) io.out << "cauchy: " << (cp->equal() ? "match" : "differ") << "\n";
                } else {
                    emit(io, j);
                }
                return ok ? kOk : kVerifyFailed;
            };
        });
    }

    // pp
    auto* pp = app.add_subcommand("pp", "Plane partitions")->require_subcommand(1);
    std::string pp_s, family = "all", mode = "norm";
    bool symmetric = false;
    {
        auto* cv = pp->add_subcommand("convert", "Matrix to plane partition or back");
        cv->add_option("--matrix", matrix_s, "Matrix as JSON rows");
        cv->add_option("--plane-partition", pp_s, "Plane partition as JSON rows");
        cv->callback([&] {
            action = [&] {
                if (!matrix_s.empty() && !pp_s.empty())
                    throw UsageError("give one of --matrix and --plane-partition");
                SparseMatrix a;
                PlanePartition p(std::vector<std::vector<int>>{});
                if (!pp_s.empty()) {
                    p = plane_partition_from_json(parse_json(pp_s, "plane-partition"), "plane-partition");
                    a = to_matrix(p);
                } else {
                    a = matrix_from_json(json_input(matrix_s, file, "matrix"));
                    p = from_matrix(a);
                }
                if (pretty) {
                    io.out << flagrsk::pretty(p) << "matrix:\n" << matrix_text(a);
                } else {
                    Json layers = Json::array();
                    for (auto& l : p.layers()) layers.push_back(to_json(l));
                    emit(io, {{"plane_partition", to_json(p)},
                              {"matrix", to_json(a)},
                              {"norm", p.norm()},
                              {"shape", to_json(p.shape())},
                              {"layers", layers}});
                }
                return kOk;
            };
        });

        auto* gf = pp->add_subcommand("gf", "Norm or trace generating function of a family");
        gf->add_option("--family", family, "all|bounded|shape")->check(CLI::IsMember({"all", "bounded", "shape"}));
        gf->add_option("--n", n_opt, "Bound on the largest part");
        gf->add_option("--shape", shape_s, "Shape bound for --family shape");
        gf->add_flag("--symmetric", symmetric, "Symmetric plane partitions");
        gf->add_option("--epsilon", epsilon, "Diagonal divisibility for --symmetric");
        gf->add_option("--mode", mode, "norm|trace")->check(CLI::IsMember({"norm", "trace"}));
        gf->add_option("--cap", cap, "Norm bound")->required();
        gf->callback([&] {
            action = [&] {
                positive(cap, "cap");
                Family f;
                if (family == "bounded") {
                    if (!n_opt) throw UsageError("field 'n': required for --family bounded");
                    f.bound = *n_opt;
                } else if (family == "shape") {
                    if (shape_s.empty()) throw UsageError("field 'shape': required for --family shape");
                    f.shape = parse_shape(shape_s);
                    f.bound = n_opt;
                } else if (n_opt) {
                    throw UsageError("field 'n': use --family bounded");
                }
                if (symmetric) {
                    if (epsilon != 1 && epsilon != 2) throw UsageError("field 'epsilon': must be 1 or 2");
                    f.symmetric = true;
                    f.epsilon = epsilon;
                }
                if (mode == "norm") {
                    const auto c = norm_generating_function(f, cap);
                    if (pretty)
                        io.out << coeff_line(c) << "\n";
                    else
                        emit(io, {{"coefficients", to_json(c)}});
                } else {
                    const TruncatedSeries s = trace_generating_function(f, cap);
                    const TraceAlphabet ab{std::max(0, cap - 1), f.symmetric};
                    if (pretty)
                        io.out << s.to_string(ab.names()) << "\n";
                    else
                        emit(io, to_json(s, ab.names()));
                }
                return kOk;
            };
        });
    }

    // graph
    auto* graph = app.add_subcommand("graph", "Crystal graphs")->require_subcommand(1);
    {
        auto* dot = graph->add_subcommand("dot", "Bounded matrix crystal graph in DOT");
        dot->add_option("--sum-bound", sum_bound, "Bound on the entry sum")->required();
        dot->add_option("--lo", lo, "Smallest operator index")->required();
        dot->add_option("--hi", hi, "Largest operator index")->required();
        dot->callback([&] {
            action = [&] {
                positive(sum_bound, "sum-bound");
                if (lo > hi) throw UsageError("field 'lo': must not exceed --hi");
                const IndexWindow win{lo, hi};
                const auto colors = dot_colors(win, std::getenv("GRAPH_DOT_COLORS"));
                const auto s = closure_from_zero(sum_bound, win, jobs);
                std::map<SparseMatrix, int> id;
                for (auto& a : s) id.emplace(a, static_cast<int>(id.size()));
                io.out << "digraph crystal {\n  node [shape=box, fontname=monospace];\n";
                for (auto& [a, k] : id) io.out << "  n" << k << " [label=\"" << dot_label(a) << "\"];\n";
                for (auto& [a, k] : id)
                    for (int i = lo; i <= hi; ++i) {
                        const auto b = matrix_apply(a, i, Dir::Lower);
                        if (!b) continue;
                        const auto it = id.find(*b);
                        if (it == id.end()) continue;
                        io.out << "  n" << k << " -> n" << it->second << " [label=\"" << i << "\", color=\""
                               << colors.at(i) << "\"];\n";
                    }
                io.out << "}\n";
                return kOk;
            };
        });
    }

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, io.out, io.err);
        return code == 0 ? kOk : kUsage;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        io.err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        io.err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Json::exception& e) {
        io.err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace flagrsk::cli
