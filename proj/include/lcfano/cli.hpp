// cli.hpp
// Command-line front end. Reports are JSON lines on stdout with the fields
// command, inputs, theorem_tag, results, status; human-readable summaries go
// to stderr. Exact values are serialized as "p/q" strings; --float adds
// decimal renderings next to them. Exit codes: 0 all verified, 1 violation,
// 2 indecisive or resource-capped, 3 usage error.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lcfano/barycentric.hpp"
#include "lcfano/decomposition.hpp"
#include "lcfano/errors.hpp"
#include "lcfano/extremal.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/json_io.hpp"
#include "lcfano/optimizer.hpp"
#include "lcfano/rational.hpp"
#include "lcfano/sylvester.hpp"
#include "lcfano/verify.hpp"

namespace lcfano {
namespace cli_detail {

// Tags tying each subcommand's report to the statement it exercises.
inline constexpr const char* kTagSequence = "Sec1.1";
inline constexpr const char* kTagBound = "Thm1.1";
inline constexpr const char* kTagExample43 = "Ex4.3";
inline constexpr const char* kTagThm13 = "Thm1.3";
inline constexpr const char* kTagNormalForm = "Thm1.2";
inline constexpr const char* kTagGeometry = "Sec2.1";
inline constexpr const char* kTagLc = "Def2.1";
inline constexpr const char* kTagMinimal = "Def2.7";
inline constexpr const char* kTagPs = "Thm3.1";
inline constexpr const char* kTagMinimizeFull = "Thm3.6";
inline constexpr const char* kTagMinimizeFirst = "Thm3.7";
inline constexpr const char* kTagProp44 = "Prop4.4";
inline constexpr const char* kTagSweep = "Prop5.2";
inline constexpr const char* kTagConstant = "Lem5.1";
inline constexpr const char* kTagHeadline = "Thm1.1";
inline constexpr const char* kTagDecompose = "Thm2.8";

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string js(const std::string& s) { return "\"" + json_escape(s) + "\""; }

// Ordered JSON object builder; values are pre-serialized tokens.
class JsonObject {
public:
    JsonObject& raw(const std::string& key, const std::string& token) {
        if (!body_.empty()) body_ += ",";
        body_ += js(key) + ":" + token;
        return *this;
    }
    JsonObject& str(const std::string& key, const std::string& value) {
        return raw(key, js(value));
    }
    JsonObject& num(const std::string& key, long long value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& num(const std::string& key, unsigned long long value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& num(const std::string& key, std::size_t value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& num(const std::string& key, long value) {
        return raw(key, std::to_string(value));
    }
    JsonObject& boolean(const std::string& key, bool value) {
        return raw(key, value ? "true" : "false");
    }
    std::string str() const { return "{" + body_ + "}"; }

private:
    std::string body_;
};

inline std::string jarr(const std::vector<std::string>& tokens) {
    std::string out = "[";
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += ",";
        out += tokens[i];
    }
    return out + "]";
}

inline std::string jstrings(const std::vector<std::string>& values) {
    std::vector<std::string> tokens;
    tokens.reserve(values.size());
    for (const auto& v : values) tokens.push_back(js(v));
    return jarr(tokens);
}

inline std::string jratvec(const RatVec& v) {
    std::vector<std::string> tokens;
    tokens.reserve(v.size());
    for (const auto& r : v) tokens.push_back(js(to_string(r)));
    return jarr(tokens);
}

inline std::string jintvec(const IntVec& v) {
    std::vector<std::string> tokens;
    tokens.reserve(v.size());
    for (const auto& z : v) tokens.push_back(js(to_string(z)));
    return jarr(tokens);
}

inline std::string jsizes(const std::vector<std::size_t>& v) {
    std::vector<std::string> tokens;
    tokens.reserve(v.size());
    for (const auto n : v) tokens.push_back(std::to_string(n));
    return jarr(tokens);
}

// Decimal rendering of an exact value; falls back to a marker string when
// the value does not fit a double.
inline std::string jfloat(const Rat& r) {
    const double x = mpq_get_d(r.get_mpq_t());
    if (!std::isfinite(x)) return js("overflow");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void emit_report(std::ostream& out, const std::string& command,
                        const std::string& inputs_token, const std::string& tag,
                        const std::string& results_token, const std::string& status) {
    out << "{\"command\":" << js(command) << ",\"inputs\":" << inputs_token
        << ",\"theorem_tag\":" << js(tag) << ",\"results\":" << results_token
        << ",\"status\":" << js(status) << "}\n";
}

inline int exit_code_for(const std::string& status) {
    if (status == "verified") return 0;
    if (status == "violated") return 1;
    return 2;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Step and tolerance arguments accept both "p/q" and decimal notation.
inline Rat parse_positive_rational(const std::string& text, const std::string& what) {
    std::string s = text;
    const auto dot = s.find('.');
    Rat value;
    if (dot != std::string::npos) {
        bool negative = false;
        std::string digits = s;
        if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
            negative = digits[0] == '-';
            digits = digits.substr(1);
        }
        const auto d2 = digits.find('.');
        const std::string ipart = digits.substr(0, d2);
        const std::string fpart = digits.substr(d2 + 1);
        if (fpart.empty() || fpart.find_first_not_of("0123456789") != std::string::npos ||
            (!ipart.empty() && ipart.find_first_not_of("0123456789") != std::string::npos))
            throw ParseError(what + ": bad decimal literal '" + text + "'");
        const Int den = int_pow(Int(10), static_cast<unsigned long>(fpart.size()));
        const Int num = int_from_string((ipart.empty() ? "0" : ipart) + fpart);
        value = make_rat(negative ? Int(-num) : num, den);
    } else {
        value = rat_from_string(s);
    }
    if (value <= 0) throw ParseError(what + " must be positive");
    return value;
}

inline unsigned long resolve_cap(unsigned long flag_value, bool flag_set) {
    if (flag_set) return flag_value;
    if (const char* env = std::getenv("LCFANO_CAP")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw ParseError("LCFANO_CAP must be a positive integer");
    }
    return kDefaultEnumCap;
}

// Smallest nonzero interior point: minimal sup-norm, then lexicographic.
inline std::optional<IntVec> smallest_witness(const std::vector<IntVec>& points) {
    std::optional<IntVec> best;
    Int best_norm;
    for (const auto& p : points) {
        if (is_zero(p)) continue;
        Int norm(0);
        for (const auto& c : p) {
            Int a = c >= 0 ? c : Int(-c);
            if (a > norm) norm = a;
        }
        if (!best || norm < best_norm || (norm == best_norm && p < *best)) {
            best = p;
            best_norm = norm;
        }
    }
    return best;
}

struct ParsedFile {
    std::optional<LatticePolytope> lattice;
    std::optional<RationalPolytopeData> rational;

    std::size_t dim() const { return lattice ? lattice->dim() : rational->dim; }
    RatMat rational_vertices() const {
        return lattice ? lattice->rational_vertices() : rational->vertices;
    }
};

inline ParsedFile load_polytope_file(const std::string& path, bool lattice_only) {
    const std::string text = read_file(path);
    ParsedFile out;
    try {
        out.lattice = parse_lattice_polytope(text);
        return out;
    } catch (const ParseError& first) {
        if (lattice_only) throw;
        try {
            out.rational = parse_rational_polytope(text);
            return out;
        } catch (const ParseError&) {
            throw ParseError(path + ": not a polytope JSON file (" + first.what() + ")");
        }
    }
}

inline std::string human_vec(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace cli_detail

inline int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;

    CLI::App app{"exact arithmetic for lc Fano simplices: constructions, checks, and sweeps"};
    app.require_subcommand(1);

    bool with_float = false;
    unsigned jobs = 1;
    long arg_q = 1, arg_n = 1, arg_d = 3, arg_qmax = 4, arg_radius = 8, arg_nmax = 6;
    long arg_dmax = 6;
    unsigned long arg_cap = 0;
    std::string arg_kind = "example43", arg_target = "d", arg_file, arg_step, arg_tol = "1/1000000000000";
    bool want_oracle = false;

    CLI::App* c_useq = app.add_subcommand("useq", "print the sequence u_1..u_n");
    c_useq->add_option("--q", arg_q, "sequence parameter q >= 1")->required();
    c_useq->add_option("--n", arg_n, "number of terms")->required();

    CLI::App* c_bound = app.add_subcommand("bound", "anti-canonical volume bound 2u_d^2/q^(d+1)");
    c_bound->add_option("--d", arg_d, "dimension")->required();
    c_bound->add_option("--q", arg_q, "lc parameter")->required();

    CLI::App* c_extremal = app.add_subcommand("extremal", "construct an extremal simplex");
    c_extremal->add_option("--d", arg_d, "dimension")->required();
    c_extremal->add_option("--q", arg_q, "lc parameter")->required();
    c_extremal->add_option("--kind", arg_kind, "example43|thm13|dual")->required();

    CLI::App* c_weights = app.add_subcommand("weights", "weight vector of a simplex through 0");
    c_weights->add_option("file", arg_file, "polytope JSON file")->required();

    CLI::App* c_volume = app.add_subcommand("volume", "normalized volume of a polytope");
    c_volume->add_option("file", arg_file, "polytope JSON file")->required();

    CLI::App* c_dual = app.add_subcommand("dual", "dual polytope (0 must be interior)");
    c_dual->add_option("file", arg_file, "polytope JSON file")->required();

    CLI::App* c_lc = app.add_subcommand("check-lc", "is int((1/q)P) free of nonzero lattice points");
    c_lc->add_option("--q", arg_q, "lc parameter")->required();
    c_lc->add_option("file", arg_file, "lattice polytope JSON file")->required();
    CLI::Option* lc_cap_opt = c_lc->add_option("--cap", arg_cap, "box scan budget");

    CLI::App* c_fano = app.add_subcommand("check-fano", "0 interior and all vertices primitive");
    c_fano->add_option("file", arg_file, "lattice polytope JSON file")->required();

    CLI::App* c_minimal = app.add_subcommand("check-minimal", "no vertex can be dropped");
    c_minimal->add_option("--q", arg_q, "lc parameter")->required();
    c_minimal->add_option("file", arg_file, "lattice polytope JSON file")->required();

    CLI::App* c_pscheck = app.add_subcommand("ps-check", "product-sum inequalities of beta(0)");
    c_pscheck->add_option("--q", arg_q, "lc parameter")->required();
    c_pscheck->add_option("file", arg_file, "simplex JSON file")->required();

    CLI::App* c_pswitness = app.add_subcommand("ps-witness", "interior lattice point from a PS failure");
    c_pswitness->add_option("--q", arg_q, "lc parameter")->required();
    c_pswitness->add_option("file", arg_file, "lattice simplex JSON file")->required();
    c_pswitness->add_option("--radius", arg_radius, "multiplier search radius")->required();

    CLI::App* c_minimize = app.add_subcommand("minimize", "minimum over the candidate tuples");
    c_minimize->add_option("--d", arg_d, "dimension")->required();
    c_minimize->add_option("--q", arg_q, "lc parameter")->required();
    c_minimize->add_option("--target", arg_target, "d (first d factors) or d1 (all d+1)")->required();
    c_minimize->add_flag("--oracle", want_oracle, "cross-check with a grid search");
    c_minimize->add_option("--step", arg_step, "grid step, e.g. 1/200 or 0.005");
    c_minimize->add_option("--jobs", jobs, "worker threads for the grid");

    CLI::App* c_prop44 = app.add_subcommand("verify-prop44", "unimodular transport onto the normal form");
    c_prop44->add_option("--d", arg_d, "dimension")->required();
    c_prop44->add_option("--q", arg_q, "lc parameter")->required();

    CLI::App* c_sweep = app.add_subcommand("sweep5", "multinomial bound over decomposition shapes");
    c_sweep->add_option("--dmax", arg_dmax, "largest ambient dimension")->required();
    c_sweep->add_option("--qmax", arg_qmax, "largest lc parameter")->required();
    c_sweep->add_option("--jobs", jobs, "worker threads");

    CLI::App* c_approx = app.add_subcommand("approx-k", "certified enclosure of the growth constant");
    c_approx->add_option("--q", arg_q, "sequence parameter q >= 2")->required();
    c_approx->add_option("--nmax", arg_nmax, "sandwich depth");
    c_approx->add_option("--tol", arg_tol, "enclosure width, e.g. 1/10^12");

    CLI::App* c_verify = app.add_subcommand("verify-all", "run the full verification suite");
    c_verify->add_option("--dmax", arg_dmax, "dimension ceiling");
    c_verify->add_option("--qmax", arg_qmax, "lc parameter ceiling");
    c_verify->add_option("--jobs", jobs, "worker threads");

    CLI::App* c_decompose = app.add_subcommand("decompose", "split a minimal non-simplex into simplices");
    c_decompose->add_option("--q", arg_q, "lc parameter")->required();
    c_decompose->add_option("file", arg_file, "lattice polytope JSON file")->required();

    for (CLI::App* sub :
         {c_useq, c_bound, c_extremal, c_weights, c_volume, c_dual, c_lc, c_fano, c_minimal,
          c_pscheck, c_pswitness, c_minimize, c_prop44, c_sweep, c_approx, c_verify, c_decompose})
        sub->add_flag("--float", with_float, "add decimal renderings to exact values");

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 3;
    }

    auto usage = [&](const std::string& message) {
        err << "usage error: " << message << "\n";
        return 3;
    };

    try {
        if (*c_useq) {
            if (arg_q < 1) return usage("--q must be >= 1");
            if (arg_n < 1 || arg_n > 24) return usage("--n must be in 1..24");
            const auto values = u_list(arg_q, static_cast<std::size_t>(arg_n));
            std::vector<std::string> strs;
            for (const auto& v : values) strs.push_back(to_string(v));
            const std::string results =
                JsonObject().raw("values", jstrings(strs)).str();
            const std::string inputs = JsonObject().num("q", arg_q).num("n", arg_n).str();
            emit_report(out, "useq", inputs, kTagSequence, results, "verified");
            err << "u_1..u_" << arg_n << " for q=" << arg_q << ":";
            for (const auto& s : strs) {
                if (s.size() > 40)
                    err << " ...(" << s.size() << " digits)";
                else
                    err << " " << s;
            }
            err << "\n";
            return 0;
        }

        if (*c_bound) {
            if (arg_d < 2) return usage("--d must be >= 2");
            if (arg_q < 1) return usage("--q must be >= 1");
            const Rat value = volume_bound(static_cast<std::size_t>(arg_d), arg_q);
            JsonObject results;
            results.str("value", to_string(value));
            if (with_float) results.raw("value_float", jfloat(value));
            const std::string inputs = JsonObject().num("d", arg_d).num("q", arg_q).str();
            emit_report(out, "bound", inputs, kTagBound, results.str(), "verified");
            err << "volume bound at d=" << arg_d << ", q=" << arg_q << ": " << to_string(value)
                << "\n";
            return 0;
        }

        if (*c_extremal) {
            std::optional<ExtremalSimplex> es;
            const char* tag = kTagExample43;
            if (arg_kind == "example43") {
                if (arg_d < 3 || arg_q < 1) return usage("example43 needs --d >= 3, --q >= 1");
                es = example43_simplex(static_cast<std::size_t>(arg_d), arg_q);
            } else if (arg_kind == "thm13") {
                if (arg_d < 2 || arg_q < 1) return usage("thm13 needs --d >= 2, --q >= 1");
                es = thm13_simplex(static_cast<std::size_t>(arg_d), arg_q);
                tag = kTagThm13;
            } else if (arg_kind == "dual") {
                if (arg_d < 3 || arg_q < 2) return usage("dual needs --d >= 3, --q >= 2");
                es = dual_normal_form(static_cast<std::size_t>(arg_d), arg_q);
                tag = kTagNormalForm;
            } else {
                return usage("--kind must be example43, thm13, or dual");
            }
            const Rat vol = normalized_volume(es->simplex());
            if (vol != es->expected_vol) throw Error("constructed volume disagrees with the formula");
            JsonObject results;
            results.str("kind", arg_kind);
            if (arg_kind == "dual") {
                results.raw("polytope", write_rational_polytope_json(es->d, es->vertices));
            } else {
                results.raw("polytope", write_polytope_json(es->d, es->lattice_vertices));
                const WeightVector w = conrad_weights(*es);
                std::vector<std::string> ws;
                for (const auto& x : w.w) ws.push_back(to_string(x));
                results.raw("weights", jstrings(ws));
            }
            results.raw("beta", jratvec(es->expected_beta));
            results.str("volume", to_string(vol));
            results.str("dual_volume", to_string(es->expected_dual_vol));
            if (with_float) {
                results.raw("volume_float", jfloat(vol));
                results.raw("dual_volume_float", jfloat(es->expected_dual_vol));
            }
            const std::string inputs =
                JsonObject().num("d", arg_d).num("q", arg_q).str("kind", arg_kind).str();
            emit_report(out, "extremal", inputs, tag, results.str(), "verified");
            err << arg_kind << " at d=" << arg_d << ", q=" << arg_q << ": volume "
                << to_string(vol) << ", dual volume " << to_string(es->expected_dual_vol) << "\n";
            return 0;
        }

        if (*c_weights) {
            const ParsedFile pf = load_polytope_file(arg_file, false);
            const RatMat verts = pf.rational_vertices();
            const RationalSimplex simplex(pf.dim(), verts);
            const WeightVector w = conrad_weights(simplex);
            std::vector<std::string> ws;
            for (const auto& x : w.w) ws.push_back(to_string(x));
            const std::string results =
                JsonObject().raw("weights", jstrings(ws)).boolean("reduced", w.reduced).str();
            const std::string inputs = JsonObject().str("file", arg_file).str();
            emit_report(out, "weights", inputs, kTagExample43, results, "verified");
            // The human line is the weighted-space signature: order-free, so
            // print it largest first regardless of vertex order.
            IntVec signature = w.w;
            std::sort(signature.begin(), signature.end(), std::greater<>());
            std::string line;
            for (const auto& x : signature) {
                if (!line.empty()) line += " ";
                line += to_string(x);
            }
            err << line << "\n";
            return 0;
        }

        if (*c_volume) {
            const ParsedFile pf = load_polytope_file(arg_file, false);
            const Rat vol = pf.lattice
                                ? normalized_volume(*pf.lattice)
                                : normalized_volume(pf.rational->vertices, pf.rational->dim);
            JsonObject results;
            results.str("volume", to_string(vol));
            if (with_float) results.raw("volume_float", jfloat(vol));
            const std::string inputs = JsonObject().str("file", arg_file).str();
            emit_report(out, "volume", inputs, kTagGeometry, results.str(), "verified");
            err << "normalized volume: " << to_string(vol) << "\n";
            return 0;
        }

        if (*c_dual) {
            const ParsedFile pf = load_polytope_file(arg_file, false);
            const HalfspaceRep rep = facets_of_points(pf.rational_vertices(), pf.dim());
            const RatMat dual = dual_vertices(rep);
            const std::string results =
                JsonObject().raw("polytope", write_rational_polytope_json(pf.dim(), dual)).str();
            const std::string inputs = JsonObject().str("file", arg_file).str();
            emit_report(out, "dual", inputs, kTagGeometry, results, "verified");
            err << "dual polytope with " << dual.size() << " vertices\n";
            return 0;
        }

        if (*c_lc) {
            if (arg_q < 1) return usage("--q must be >= 1");
            const unsigned long cap = resolve_cap(arg_cap, lc_cap_opt->count() > 0);
            const ParsedFile pf = load_polytope_file(arg_file, true);
            const auto pts = interior_lattice_points(*pf.lattice, make_rat(1, arg_q), cap);
            const auto witness = smallest_witness(pts);
            JsonObject results;
            results.boolean("lc", !witness.has_value());
            const std::string inputs =
                JsonObject().num("q", arg_q).str("file", arg_file).str();
            if (!witness) {
                emit_report(out, "check-lc", inputs, kTagLc, results.str(), "verified");
                err << "lc at 1/" << arg_q << ": yes\n";
                return 0;
            }
            results.raw("witness", jintvec(*witness));
            emit_report(out, "check-lc", inputs, kTagLc, results.str(), "violated");
            err << "lc at 1/" << arg_q << ": no, interior point " << human_vec(*witness) << "\n";
            return 1;
        }

        if (*c_fano) {
            const ParsedFile pf = load_polytope_file(arg_file, true);
            const LatticePolytope& p = *pf.lattice;
            std::string reason;
            if (!p.facets().origin_interior) {
                reason = "0 is not strictly interior";
            } else {
                for (const auto& v : p.vertices())
                    if (!is_primitive(v)) {
                        reason = "vertex " + human_vec(v) + " is not primitive";
                        break;
                    }
            }
            JsonObject results;
            results.boolean("fano", reason.empty());
            if (!reason.empty()) results.str("reason", reason);
            const std::string inputs = JsonObject().str("file", arg_file).str();
            const std::string status = reason.empty() ? "verified" : "violated";
            emit_report(out, "check-fano", inputs, kTagLc, results.str(), status);
            err << "Fano: " << (reason.empty() ? "yes" : "no, " + reason) << "\n";
            return reason.empty() ? 0 : 1;
        }

        if (*c_minimal) {
            if (arg_q < 1) return usage("--q must be >= 1");
            const unsigned long cap = resolve_cap(0, false);
            const ParsedFile pf = load_polytope_file(arg_file, true);
            const auto drop = minimality_counterexample(*pf.lattice, arg_q, cap);
            JsonObject results;
            results.boolean("minimal", !drop.has_value());
            const std::string inputs =
                JsonObject().num("q", arg_q).str("file", arg_file).str();
            if (!drop) {
                emit_report(out, "check-minimal", inputs, kTagMinimal, results.str(), "verified");
                err << "minimal: yes\n";
                return 0;
            }
            const IntVec& v = pf.lattice->vertices()[*drop];
            results.num("droppable_vertex", *drop);
            results.raw("vertex", jintvec(v));
            emit_report(out, "check-minimal", inputs, kTagMinimal, results.str(), "violated");
            err << "minimal: no, vertex " << human_vec(v) << " can be dropped\n";
            return 1;
        }

        if (*c_pscheck) {
            if (arg_q < 1) return usage("--q must be >= 1");
            const ParsedFile pf = load_polytope_file(arg_file, false);
            const RationalSimplex simplex(pf.dim(), pf.rational_vertices());
            const BarycentricTuple bc = barycentric_coords(simplex, RatVec(pf.dim(), Rat(0)));
            const PSReport report = ps_check(bc, arg_q);
            std::vector<std::string> rows;
            for (const auto& row : report.rows) {
                JsonObject jr;
                jr.num("t", row.t);
                jr.str("lhs", to_string(row.lhs));
                jr.str("rhs", to_string(row.rhs));
                jr.boolean("holds", row.holds);
                jr.boolean("tight", row.tight);
                rows.push_back(jr.str());
            }
            JsonObject results;
            results.raw("beta", jratvec(bc.beta));
            results.raw("rows", jarr(rows));
            results.boolean("all_hold", report.all_hold());
            const std::size_t failure = report.first_failure();
            if (failure != 0) results.num("first_failure", failure);
            const std::string inputs =
                JsonObject().num("q", arg_q).str("file", arg_file).str();
            const std::string status = report.all_hold() ? "verified" : "violated";
            emit_report(out, "ps-check", inputs, kTagPs, results.str(), status);
            if (report.all_hold())
                err << "all product-sum inequalities hold\n";
            else
                err << "first failure at t=" << failure << "\n";
            return report.all_hold() ? 0 : 1;
        }

        if (*c_pswitness) {
            if (arg_q < 1) return usage("--q must be >= 1");
            if (arg_radius < 1) return usage("--radius must be >= 1");
            const unsigned long cap = resolve_cap(0, false);
            const ParsedFile pf = load_polytope_file(arg_file, true);
            const IntVec w = ps_witness(*pf.lattice, arg_q, arg_radius, cap);
            RatVec qw(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) qw[i] = Rat(w[i]) * arg_q;
            const RatVec beta =
                barycentric_raw(pf.lattice->rational_vertices(), qw);
            JsonObject results;
            results.raw("witness", jintvec(w));
            results.raw("beta_of_scaled_witness", jratvec(beta));
            const std::string inputs = JsonObject()
                                           .num("q", arg_q)
                                           .str("file", arg_file)
                                           .num("radius", arg_radius)
                                           .str();
            emit_report(out, "ps-witness", inputs, kTagPs, results.str(), "violated");
            err << "witness: " << human_vec(w) << "\n";
            return 1;
        }

        if (*c_minimize) {
            if (arg_d < 2) return usage("--d must be >= 2");
            if (arg_q < 1) return usage("--q must be >= 1");
            Target target;
            if (arg_target == "d")
                target = Target::first_d;
            else if (arg_target == "d1")
                target = Target::all_d1;
            else
                return usage("--target must be d or d1");
            if (want_oracle && arg_step.empty()) return usage("--oracle requires --step");
            const std::size_t d = static_cast<std::size_t>(arg_d);
            const MinimizationResult m = minimize_candidates(d, arg_q, target);
            std::vector<std::string> candidates;
            for (const auto& c : m.table) {
                JsonObject jc;
                jc.num("l", c.l);
                jc.raw("tuple", jratvec(c.x));
                const Rat value = target == Target::first_d ? c.f_first_d : c.f_all;
                jc.str("value", to_string(value));
                if (with_float) jc.raw("value_float", jfloat(value));
                candidates.push_back(jc.str());
            }
            JsonObject results;
            results.str("target", target_label(target));
            results.num("d", arg_d);
            results.num("q", arg_q);
            results.raw("candidates", jarr(candidates));
            results.num("optimal_l", m.optimal_l);
            results.str("optimal_value", to_string(m.optimal_value));
            if (with_float) results.raw("optimal_value_float", jfloat(m.optimal_value));
            results.boolean("exception", m.exception_flag);
            if (!m.notes.empty()) results.raw("notes", jstrings(m.notes));
            if (want_oracle) {
                const Rat step = parse_positive_rational(arg_step, "--step");
                const GridResult g = grid_oracle(d, arg_q, target, step, jobs);
                JsonObject jo;
                jo.str("step", to_string(step));
                jo.str("value", to_string(g.min_value));
                if (with_float) jo.raw("value_float", jfloat(g.min_value));
                jo.raw("argmin", jratvec(g.argmin));
                jo.num("feasible_count", g.feasible_count);
                results.raw("oracle", jo.str());
                if (g.min_value < m.optimal_value)
                    throw Error("grid search undercut the exact minimum");
            }
            const std::string inputs = JsonObject()
                                           .num("d", arg_d)
                                           .num("q", arg_q)
                                           .str("target", arg_target)
                                           .str();
            const char* tag = target == Target::first_d ? kTagMinimizeFirst : kTagMinimizeFull;
            emit_report(out, "minimize", inputs, tag, results.str(), "verified");
            err << "optimal l=" << m.optimal_l << ", value " << to_string(m.optimal_value) << "\n";
            return 0;
        }

        if (*c_prop44) {
            if (arg_d < 3) return usage("--d must be >= 3");
            if (arg_q < 2) return usage("--q must be >= 2");
            const Prop44Result r = verify_prop44(static_cast<std::size_t>(arg_d), arg_q);
            JsonObject results;
            results.boolean("ok", r.ok);
            if (!r.ok) results.str("detail", r.detail);
            const std::string inputs = JsonObject().num("d", arg_d).num("q", arg_q).str();
            const std::string status = r.ok ? "verified" : "violated";
            emit_report(out, "verify-prop44", inputs, kTagProp44, results.str(), status);
            err << (r.ok ? "transport onto the normal form verified"
                         : "transport failed: " + r.detail)
                << "\n";
            return r.ok ? 0 : 1;
        }

        if (*c_sweep) {
            if (arg_dmax < 3) return usage("--dmax must be >= 3");
            if (arg_qmax < 2) return usage("--qmax must be >= 2");
            const auto records =
                section5_sweep(static_cast<std::size_t>(arg_dmax), arg_qmax, jobs);
            std::size_t violations = 0;
            for (const auto& r : records) {
                JsonObject jr;
                jr.num("d", r.d);
                jr.num("q", r.q);
                jr.num("t", r.t);
                jr.raw("d_list", jsizes(r.d_list));
                jr.str("bound_value", to_string(r.bound_value));
                jr.str("target", to_string(r.target));
                if (with_float) {
                    jr.raw("bound_value_float", jfloat(r.bound_value));
                    jr.raw("target_float", jfloat(r.target));
                }
                jr.boolean("strict", r.strict);
                out << jr.str() << "\n";
                if (!r.strict) ++violations;
            }
            JsonObject results;
            results.num("records", records.size());
            results.num("violations", violations);
            const std::string inputs =
                JsonObject().num("dmax", arg_dmax).num("qmax", arg_qmax).str();
            const std::string status = violations == 0 ? "verified" : "violated";
            emit_report(out, "sweep5", inputs, kTagSweep, results.str(), status);
            err << records.size() << " shapes, " << violations << " violations\n";
            return violations == 0 ? 0 : 1;
        }

        if (*c_approx) {
            if (arg_q < 2) return usage("--q must be >= 2");
            if (arg_nmax < 1) return usage("--nmax must be >= 1");
            const Rat tol = parse_positive_rational(arg_tol, "--tol");
            const ApproxConstant k = approx_constant(arg_q, tol);
            const bool sandwich = verify_sandwich(arg_q, static_cast<std::size_t>(arg_nmax));
            JsonObject results;
            results.str("lower", to_string(k.lower));
            results.str("upper", to_string(k.upper));
            if (with_float) {
                results.raw("lower_float", jfloat(k.lower));
                results.raw("upper_float", jfloat(k.upper));
            }
            results.num("terms", static_cast<long long>(k.terms_used));
            results.num("sandwich_nmax", arg_nmax);
            results.boolean("sandwich", sandwich);
            const std::string inputs = JsonObject()
                                           .num("q", arg_q)
                                           .num("nmax", arg_nmax)
                                           .str("tol", arg_tol)
                                           .str();
            const std::string status = sandwich ? "verified" : "violated";
            emit_report(out, "approx-k", inputs, kTagConstant, results.str(), status);
            err << "K(" << arg_q << ") in [" << jfloat(k.lower) << ", " << jfloat(k.upper)
                << "] (" << k.terms_used << " terms); sandwich to n=" << arg_nmax << ": "
                << (sandwich ? "ok" : "FAILED") << "\n";
            return sandwich ? 0 : 1;
        }

        if (*c_verify) {
            if (arg_dmax < 3) return usage("--dmax must be >= 3");
            if (arg_qmax < 2) return usage("--qmax must be >= 2");
            VerifyOptions vo;
            vo.d_max = static_cast<std::size_t>(arg_dmax);
            vo.q_max = arg_qmax;
            vo.jobs = jobs;
            const std::string inputs = JsonObject()
                                           .num("dmax", arg_dmax)
                                           .num("qmax", arg_qmax)
                                           .num("jobs", static_cast<long long>(jobs))
                                           .str();
            std::size_t passed = 0;
            const auto checks = run_all_checks(vo);
            for (const auto& c : checks) {
                JsonObject results;
                results.str("check", c.name);
                results.boolean("pass", c.pass);
                if (!c.detail.empty()) results.str("detail", c.detail);
                emit_report(out, "verify-all", inputs, kTagHeadline, results.str(),
                            c.pass ? "verified" : "violated");
                err << (c.pass ? "PASS " : "FAIL ") << c.name
                    << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
                if (c.pass) ++passed;
            }
            JsonObject summary;
            summary.num("passed", passed);
            summary.num("total", checks.size());
            emit_report(out, "verify-all", inputs, kTagHeadline, summary.str(),
                        passed == checks.size() ? "verified" : "violated");
            err << passed << "/" << checks.size() << " checks passed\n";
            return passed == checks.size() ? 0 : 1;
        }

        if (*c_decompose) {
            if (arg_q < 1) return usage("--q must be >= 1");
            const unsigned long cap = resolve_cap(0, false);
            const ParsedFile pf = load_polytope_file(arg_file, true);
            const Decomposition dec = decompose_minimal(*pf.lattice, arg_q, cap);
            std::vector<std::string> pieces;
            for (const auto& s : dec.simplices) {
                JsonObject jp;
                jp.raw("vertex_indices", jsizes(s.vertex_indices));
                jp.num("dim", s.dim);
                jp.raw("beta", jratvec(s.beta));
                pieces.push_back(jp.str());
            }
            JsonObject results;
            results.num("d", dec.d);
            results.num("q", dec.q);
            results.num("t", dec.simplices.size());
            results.raw("d_list", jsizes(dec.d_list));
            results.raw("r_list", jsizes(dec.r_list));
            results.raw("pieces", jarr(pieces));
            const std::string inputs =
                JsonObject().num("q", arg_q).str("file", arg_file).str();
            emit_report(out, "decompose", inputs, kTagDecompose, results.str(), "verified");
            err << dec.simplices.size() << " pieces, dims " << [&] {
                std::string s = "(";
                for (std::size_t i = 0; i < dec.d_list.size(); ++i)
                    s += (i ? ", " : "") + std::to_string(dec.d_list[i]);
                return s + ")";
            }() << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const DegenerateInput& e) {
        err << "input error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "indecisive: " << e.what() << "\n";
        return 2;
    }

    err << "usage error: no subcommand\n";
    return 3;
}

}  // namespace lcfano
