// acd4: analyze, construct, search and verify additive codes over GF(4).
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "acd/catalog.hpp"
#include "acd/codefile.hpp"
#include "acd/constructions.hpp"
#include "acd/errors.hpp"
#include "acd/search.hpp"

namespace {

using namespace acd;

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitLimit = 4;
constexpr int kExitVerify = 5;

std::string yesno(bool b) { return b ? "yes" : "no"; }

// trH/trE select the trace forms directly. H and E are the GF(4)-valued
// Hermitian/Euclidean products, which induce the same duals as their trace
// counterparts on linear codes only; `linear` says whether the target is one.
Form parse_form(const std::string& s, bool linear = false) {
    if (s == "trH") return Form::TraceHermitian;
    if (s == "trE") return Form::TraceEuclidean;
    if (s == "H" || s == "E") {
        if (!linear)
            throw PreconditionError("inner product `" + s +
                                    "` applies only to GF(4)-linear codes (use trH/trE)");
        return s == "H" ? Form::TraceHermitian : Form::TraceEuclidean;
    }
    throw PreconditionError("unknown inner product `" + s + "` (want trH, trE, H or E)");
}

Gf4 parse_scalar(const std::string& s) {
    if (s.size() == 1) {
        auto x = Gf4::from_symbol(s[0]);
        if (x && !x->is_zero()) return *x;
    }
    throw PreconditionError("scalar must be one of 1, w, W");
}

std::string dist_or_none(const std::optional<size_t>& d) {
    return d ? std::to_string(*d) : "none";
}

void print_additive_info(std::ostream& out, const AdditiveCode& code, size_t enum_limit,
                         bool with_paut, size_t paut_limit) {
    // Everything is computed before any output so a limit error cannot leave a
    // half-written report behind.
    std::string dist = dist_or_none(code.min_distance(enum_limit));
    std::string weights = weight_distribution_string(code.weight_distribution(enum_limit));
    bool linear = code.is_linear();
    bool trh = code.is_acd(Form::TraceHermitian);
    bool tre = code.is_acd(Form::TraceEuclidean);
    std::optional<uint64_t> paut;
    if (with_paut) paut = code.paut_order(paut_limit);

    out << "parameters: (" << code.length() << ", 2^" << code.k() << ", " << dist << ")\n";
    out << "2-rank: " << code.k() << "\n";
    out << "gf4-linear: " << yesno(linear) << "\n";
    out << "weight distribution: " << weights << "\n";
    out << "trace-Hermitian ACD: " << yesno(trh);
    if (!trh && code.k() % 2 == 1) out << " (k odd)";
    out << "\n";
    out << "trace-Euclidean ACD: " << yesno(tre) << "\n";
    if (paut) out << "paut order: " << *paut << "\n";
}

int cmd_info(const std::string& path, size_t enum_limit, bool with_paut, size_t paut_limit) {
    CodeFile cf = parse_code_file(path);
    std::cout << "file: " << path << "\n";
    std::cout << "kind: " << kind_name(cf.kind) << "\n";
    switch (cf.kind) {
        case CodeKind::Binary: {
            BinaryCode code = cf.to_binary();
            std::string dist = dist_or_none(code.min_distance(enum_limit));
            std::string weights =
                weight_distribution_string(code.weight_distribution(enum_limit));
            std::cout << "parameters: [" << code.length() << ", " << code.dim() << ", " << dist
                      << "]\n";
            std::cout << "lcd: " << yesno(code.is_lcd()) << "\n";
            std::cout << "self-dual: " << yesno(code.is_self_dual()) << "\n";
            std::cout << "cyclic: " << yesno(code.is_cyclic()) << "\n";
            std::cout << "weight distribution: " << weights << "\n";
            break;
        }
        case CodeKind::LinearF4: {
            AdditiveCode code = cf.to_additive();
            std::string dist = dist_or_none(code.min_distance(enum_limit));
            std::cout << "gf4-parameters: [" << cf.n << ", " << cf.k << ", " << dist << "]\n";
            F4Matrix eg = cf.gen * cf.gen.transpose();
            F4Matrix hg = cf.gen * cf.gen.conj_transpose();
            std::cout << "euclidean-lcd: " << yesno(eg.f4_invertible()) << "\n";
            std::cout << "hermitian-lcd: " << yesno(hg.f4_invertible()) << "\n";
            print_additive_info(std::cout, code, enum_limit, with_paut, paut_limit);
            break;
        }
        case CodeKind::Additive: {
            print_additive_info(std::cout, cf.to_additive(), enum_limit, with_paut, paut_limit);
            break;
        }
    }
    return 0;
}

void emit_additive(const AdditiveCode& code, const std::string& out_path,
                   const std::string& properties) {
    std::ostringstream text;
    text << properties;
    write_code(text, code);
    std::cout << text.str();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write `" + out_path + "`");
        f << text.str();
    }
}

void emit_binary(const BinaryCode& code, const std::string& out_path,
                 const std::string& properties) {
    std::ostringstream text;
    text << properties;
    write_code(text, code);
    std::cout << text.str();
    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw std::runtime_error("cannot write `" + out_path + "`");
        f << text.str();
    }
}

std::string additive_properties(const AdditiveCode& code) {
    std::ostringstream os;
    os << "# (" << code.length() << ", 2^" << code.k() << ", "
       << dist_or_none(code.min_distance()) << ")";
    os << " trace-Hermitian ACD: " << yesno(code.is_acd(Form::TraceHermitian));
    os << ", trace-Euclidean ACD: " << yesno(code.is_acd(Form::TraceEuclidean)) << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive complementary dual codes over GF(4)"};
    app.require_subcommand(1);

    // --- info ---
    auto* info = app.add_subcommand("info", "analyze a code file");
    std::string info_file;
    size_t enum_limit = AdditiveCode::kDefaultEnumLimit;
    size_t paut_limit = AdditiveCode::kDefaultPautLimit;
    bool with_paut = false;
    info->add_option("file", info_file, "code file")->required();
    info->add_option("--enum-limit", enum_limit, "max k for codeword enumeration");
    info->add_flag("--paut", with_paut, "also compute the permutation automorphism order");
    info->add_option("--paut-limit", paut_limit, "max length for the permutation search");

    // --- construct ---
    auto* construct = app.add_subcommand("construct", "build a code from inputs");
    construct->require_subcommand(1);
    construct->fallthrough();
    std::string out_path;
    construct->add_option("--out", out_path, "also write the result to this file");

    auto* lift = construct->add_subcommand(
        "lift", "binary LCD code viewed over GF(4) (trace-Hermitian ACD)");
    std::string lift_in;
    lift->add_option("file", lift_in, "binary code file")->required();

    auto* mixc = construct->add_subcommand("mix", "a*C + b*D from binary codes C, D");
    std::string mix_a, mix_b, mix_cf, mix_df;
    mixc->add_option("a", mix_a, "scalar for C: 1, w or W")->required();
    mixc->add_option("cfile", mix_cf, "binary code C")->required();
    mixc->add_option("b", mix_b, "scalar for D: 1, w or W")->required();
    mixc->add_option("dfile", mix_df, "binary code D")->required();

    auto* sdc = construct->add_subcommand(
        "sd-complement", "a*C + b*complement(C) for self-dual C (trace-Hermitian ACD)");
    std::string sdc_in, sdc_a = "1", sdc_b = "w";
    sdc->add_option("file", sdc_in, "binary self-dual code file")->required();
    sdc->add_option("--a", sdc_a, "scalar for C");
    sdc->add_option("--b", sdc_b, "scalar for the complement");

    auto* mixlcd = construct->add_subcommand(
        "mix-lcd", "w*C + w^2*D from binary LCD codes (trace-Euclidean ACD)");
    std::string mixlcd_cf, mixlcd_df;
    mixlcd->add_option("cfile", mixlcd_cf, "binary LCD code C")->required();
    mixlcd->add_option("dfile", mixlcd_df, "binary LCD code D")->required();

    auto* foldc = construct->add_subcommand("fold", "binary [2n,k] code [A|B] -> w*A + w^2*B");
    std::string fold_in;
    foldc->add_option("file", fold_in, "binary code file of even length")->required();

    auto* unfoldc = construct->add_subcommand(
        "unfold", "additive (n,2^k) code -> binary [2n,k] code of entrywise traces");
    std::string unfold_in;
    unfoldc->add_option("file", unfold_in, "additive code file")->required();

    // --- search ---
    auto* search = app.add_subcommand("search", "random search for an ACD code");
    SearchConfig cfg;
    std::string form_str = "trE";
    std::string search_out;
    unsigned threads = 1;
    search->add_option("--n", cfg.n, "length")->required();
    search->add_option("--k", cfg.k, "2-dimension (|C| = 2^k)")->required();
    search->add_option("--d", cfg.d_min, "minimum distance target")->required();
    search->add_option("--form", form_str, "inner product: trH, trE, or H/E for linear codes");
    search->add_option("--seed", cfg.seed, "PRNG seed");
    search->add_option("--max-trials", cfg.max_trials, "trial budget");
    search->add_option("--threads", threads, "parallel trial evaluation (same result)");
    search->add_option("--out", search_out, "also write the found code to this file");

    // --- scale-search ---
    auto* scale = app.add_subcommand("scale-search",
                                     "search column scalings of a code for ACD status");
    std::string scale_in, scale_form = "trE", scale_out;
    uint64_t scale_seed = 0, scale_trials = 100000;
    scale->add_option("--in", scale_in, "additive code file")->required();
    scale->add_option("--form", scale_form, "inner product: trH, trE, or H/E for linear codes");
    scale->add_option("--seed", scale_seed, "PRNG seed");
    scale->add_option("--max-trials", scale_trials, "candidate budget");
    scale->add_option("--out", scale_out, "also write the found code to this file");

    // --- verify-paper ---
    auto* verify = app.add_subcommand("verify-paper",
                                      "recompute all recorded properties of the bundled codes");
    std::string data_dir = "data";
    std::string only;
    verify->add_option("--data-dir", data_dir, "directory with the bundled code files");
    verify->add_option("--only", only, "verify a single code id");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*info) return cmd_info(info_file, enum_limit, with_paut, paut_limit);

        if (*construct) {
            AdditiveCode result;
            if (*lift) {
                result = lift_binary_lcd(parse_code_file(lift_in).to_binary());
            } else if (*mixc) {
                result = mix(parse_scalar(mix_a), parse_code_file(mix_cf).to_binary(),
                             parse_scalar(mix_b), parse_code_file(mix_df).to_binary());
            } else if (*sdc) {
                result = self_dual_complement_acd(parse_code_file(sdc_in).to_binary(),
                                                  parse_scalar(sdc_a), parse_scalar(sdc_b));
            } else if (*mixlcd) {
                result = mix_lcd_pair(parse_code_file(mixlcd_cf).to_binary(),
                                      parse_code_file(mixlcd_df).to_binary());
            } else if (*foldc) {
                result = fold(parse_code_file(fold_in).to_binary());
            } else if (*unfoldc) {
                BinaryCode unfolded = unfold(parse_code_file(unfold_in).to_additive());
                std::ostringstream os;
                os << "# [" << unfolded.length() << ", " << unfolded.dim() << ", "
                   << dist_or_none(unfolded.min_distance()) << "] lcd: "
                   << yesno(unfolded.is_lcd()) << "\n";
                emit_binary(unfolded, out_path, os.str());
                return 0;
            }
            emit_additive(result, out_path, additive_properties(result));
            return 0;
        }

        if (*search) {
            cfg.form = parse_form(form_str);
            SearchResult res = random_search(cfg, threads);
            if (!res.found) {
                std::cout << "exhausted after " << res.trials_used << " trials (seed "
                          << res.seed << ")\n";
                return kExitLimit;
            }
            std::ostringstream os;
            os << "# seed=" << res.seed << " trials=" << res.trials_used << "\n";
            emit_additive(*res.found, search_out, os.str() + additive_properties(*res.found));
            return 0;
        }

        if (*scale) {
            CodeFile in = parse_code_file(scale_in);
            if (in.kind == CodeKind::Binary)
                throw PreconditionError("scale-search expects an additive or linear4 code");
            AdditiveCode input = in.to_additive();
            SearchResult res = column_scaling_search(
                input, parse_form(scale_form, input.is_linear()), scale_seed, scale_trials);
            if (!res.found) {
                std::cout << "exhausted after " << res.trials_used << " candidates (seed "
                          << res.seed << ")\n";
                return kExitLimit;
            }
            std::ostringstream os;
            os << "# seed=" << res.seed << " candidates=" << res.trials_used << "\n";
            emit_additive(*res.found, scale_out, os.str() + additive_properties(*res.found));
            return 0;
        }

        if (*verify) {
            if (!only.empty()) {
                bool known = false;
                for (const CatalogEntry& e : catalog()) known |= e.id == only;
                if (!known) throw PreconditionError("unknown code id `" + only + "`");
            }
            auto results = verify_catalog(data_dir, only);
            return print_report(std::cout, results) ? 0 : kExitVerify;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const LimitExceeded& e) {
        std::cerr << "limit exceeded: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
