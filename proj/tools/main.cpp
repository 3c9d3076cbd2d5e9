/*
   Copyright 2026 The trisparse authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// trisparse: decide whether X^n - 1 splits into factors of weight <= 3 over
// F_q, produce the factorization, and expose the supporting machinery
// (cyclotomic polynomials, multiplicative orders, witnesses) on the command
// line.
//
// Exit codes: 0 affirmative, 1 negative but well-formed, 2 usage or domain
// error.  Output is deterministic: identical argv and seed give identical
// bytes.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "trisparse/cyclotomic.hpp"
#include "trisparse/factorize.hpp"
#include "trisparse/intutil.hpp"
#include "trisparse/json_io.hpp"
#include "trisparse/orders.hpp"
#include "trisparse/sparsity.hpp"

namespace {

using namespace trisparse;

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

struct FieldOptions {
    std::uint64_t q = 0;
    std::string modulus;
};

void add_field_options(CLI::App* cmd, FieldOptions& opts) {
    cmd->add_option("--q", opts.q, "field size, an odd prime power")->required();
    cmd->add_option("--modulus", opts.modulus,
                    "modulus coefficients as comma-separated base-r digits, low to high "
                    "(k+1 digits, monic)");
}

FieldPtr build_field(const FieldOptions& opts) {
    const auto factors = factor_integer(opts.q);
    if (factors.size() != 1) throw Error("q must be a prime power");
    const auto [r, k] = factors.front();
    std::optional<std::vector<std::uint64_t>> modulus;
    if (!opts.modulus.empty()) {
        std::vector<std::uint64_t> digits;
        std::stringstream ss(opts.modulus);
        std::string item;
        while (std::getline(ss, item, ',')) digits.push_back(std::stoull(item));
        modulus = std::move(digits);
    }
    return Field::make(r, k, std::move(modulus));
}

void emit(const nlohmann::json& doc, const std::string& text, const std::string& format,
          const std::string& out_path) {
    if (format == "json")
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << text;
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot open output file " + out_path);
        out << doc.dump(2) << "\n";
    }
}

std::string render_factor_list(const Factorization& fac) {
    std::string text;
    if (!(fac.unit() == fac.field()->one(fac.level())))
        text += fac.field()->to_string(fac.unit()) + "\n";
    for (const auto& entry : fac.entries()) {
        if (entry.multiplicity == 1)
            text += entry.poly.to_string() + "\n";
        else
            text += "(" + entry.poly.to_string() + ")^" + std::to_string(entry.multiplicity) +
                    "\n";
    }
    return text;
}

std::string render_factored_integer(std::uint64_t n) {
    std::string out;
    for (const auto& [p, e] : factor_integer(n)) {
        if (!out.empty()) out += " * ";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

int run_check(const FieldOptions& fopts, std::uint64_t n, bool verify, std::uint64_t seed,
              const std::string& format, const std::string& out_path) {
    const FieldPtr field = build_field(fopts);
    const SparsityReport report = is_sparse_theorem(field, n);
    if (verify) {
        const bool oracle = is_sparse_oracle(field, n, seed);
        if (oracle != report.sparse) {
            std::cerr << "verification mismatch: closed form says " << report.sparse
                      << ", oracle says " << oracle << "\n";
            return kError;
        }
    }

    std::string text = "sparse: ";
    text += report.sparse ? "true" : "false";
    if (report.sparse) {
        text += " (" + std::to_string(n) + " = " + render_factored_integer(n) +
                "; base primes of " + std::to_string(report.q * report.q - 1) + ": {";
        std::string primes;
        for (const auto& [p, e] : report.base_primes) {
            (void)e;
            if (!primes.empty()) primes += ", ";
            primes += std::to_string(p);
        }
        text += primes + "})";
    } else {
        text += " (offending prime " + std::to_string(*report.offending_prime) +
                " does not divide " + std::to_string(report.q * report.q - 1) + ")";
    }
    if (verify) text += "\nverified: oracle agrees";
    text += "\n";

    nlohmann::json doc = field_header_json(*field);
    doc["n"] = n;
    doc["sparse"] = report.sparse;
    nlohmann::json primes_json = nlohmann::json::object();
    for (const auto& [p, e] : report.base_primes) primes_json[std::to_string(p)] = e;
    doc["base_primes"] = std::move(primes_json);
    if (report.offending_prime) doc["offending_prime"] = *report.offending_prime;
    if (verify) doc["verified"] = true;

    emit(doc, text, format, out_path);
    return report.sparse ? kAffirmative : kNegative;
}

int run_factor(const FieldOptions& fopts, std::uint64_t n, const std::string& method,
               bool cross_check, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
    const FieldPtr field = build_field(fopts);

    std::optional<bool> sparse;
    if (n % field->characteristic() != 0) sparse = is_sparse_theorem(field, n).sparse;

    std::optional<Factorization> fac;
    if (method == "structured") {
        if (sparse.has_value() && !*sparse) {
            std::cerr << "X^" << n << " - 1 is not 3-sparse over F_" << field->size()
                      << "; rerun with --method oracle\n";
            return kNegative;
        }
        fac = factor_xn1_structured(field, n);  // throws for r | n
    } else {
        fac = factor(Polynomial::x_pow_minus_one(field, n), seed);
    }

    if (cross_check) {
        const Factorization other =
            method == "structured" ? factor(Polynomial::x_pow_minus_one(field, n), seed)
                                   : [&] {
                                         if (!sparse.has_value() || !*sparse)
                                             return *fac;  // nothing to compare against
                                         return factor_xn1_structured(field, n);
                                     }();
        if (!(other == *fac)) {
            std::cerr << "cross-check mismatch between structured and oracle factorizations\n";
            return kError;
        }
    }

    nlohmann::json doc = field_header_json(*field);
    doc["n"] = n;
    doc["sparse"] = sparse.has_value() ? nlohmann::json(*sparse) : nlohmann::json(nullptr);
    doc["factors"] = factor_entries_to_json(*fac);
    emit(doc, render_factor_list(*fac), format, out_path);
    return kAffirmative;
}

int run_cyclo(const FieldOptions& fopts, std::uint64_t d, const std::string& format,
              const std::string& out_path) {
    const FieldPtr field = build_field(fopts);
    const Polynomial phi = cyclotomic_poly(field, d);
    nlohmann::json doc = field_header_json(*field);
    doc["d"] = d;
    doc["coeffs"] = poly_to_json(phi);
    doc["degree"] = phi.degree();
    doc["weight"] = phi.weight();
    emit(doc, phi.to_string() + "\n", format, out_path);
    return kAffirmative;
}

int run_order(std::uint64_t base, std::uint64_t mod, bool verify, const std::string& format,
              const std::string& out_path) {
    const std::uint64_t order = ord_general(base, mod);
    if (verify) {
        const std::uint64_t brute = ord_bruteforce(base, mod);
        if (brute != order) {
            std::cerr << "verification mismatch: closed form " << order << ", brute force "
                      << brute << "\n";
            return kError;
        }
    }
    nlohmann::json doc;
    doc["base"] = base;
    doc["mod"] = mod;
    doc["order"] = order;
    if (verify) doc["verified"] = true;
    std::string text = std::to_string(order) + "\n";
    if (verify) text += "verified: brute force agrees\n";
    emit(doc, text, format, out_path);
    return kAffirmative;
}

int run_enumerate(const FieldOptions& fopts, std::uint64_t bound, const std::string& format,
                  const std::string& out_path) {
    const FieldPtr field = build_field(fopts);
    const std::vector<std::uint64_t> values = enumerate_sparse(field, bound);
    std::string text;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) text += " ";
        text += std::to_string(values[i]);
    }
    text += "\n";
    nlohmann::json doc = field_header_json(*field);
    doc["bound"] = bound;
    doc["values"] = values;
    emit(doc, text, format, out_path);
    return kAffirmative;
}

int run_witness(const FieldOptions& fopts, std::uint64_t p, std::uint64_t seed,
                const std::string& format, const std::string& out_path) {
    const FieldPtr field = build_field(fopts);
    Polynomial w(field);
    try {
        w = witness_nonsparse(field, p, seed);
    } catch (const NoWitnessExists&) {
        std::cout << "no witness: " << p << " divides q^2 - 1, so X^" << p
                  << " - 1 is 3-sparse over F_" << field->size() << "\n";
        return kNegative;
    }
    const std::string text =
        w.to_string() + "\nweight " + std::to_string(w.weight()) + " >= 4 => X^" +
        std::to_string(p) + " - 1 is not 3-sparse over F_" + std::to_string(field->size()) +
        "\n";
    nlohmann::json doc = field_header_json(*field);
    doc["p"] = p;
    nlohmann::json wj;
    wj["coeffs"] = poly_to_json(w);
    wj["degree"] = w.degree();
    wj["weight"] = w.weight();
    doc["witness"] = std::move(wj);
    emit(doc, text, format, out_path);
    return kAffirmative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-sparsity of X^n - 1 over finite fields"};
    app.require_subcommand(1);

    FieldOptions fopts;
    std::uint64_t n = 0, d = 0, p = 0, bound = 0, order_base = 0, order_mod = 0;
    std::uint64_t seed = 0;
    std::string format = "text", out_path, method = "structured";
    bool verify = false, cross_check = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--out", out_path, "write the JSON document to this path");
        cmd->add_option("--seed", seed, "seed for randomized factorization steps");
    };

    CLI::App* check = app.add_subcommand("check", "decide 3-sparsity of X^n - 1");
    add_field_options(check, fopts);
    check->add_option("--n", n, "exponent n")->required();
    check->add_flag("--verify", verify, "cross-check against the factorization oracle");
    add_common(check);

    CLI::App* fct = app.add_subcommand("factor", "factor X^n - 1 into irreducibles");
    add_field_options(fct, fopts);
    fct->add_option("--n", n, "exponent n")->required();
    fct->add_option("--method", method, "structured (closed form) or oracle (generic)")
        ->check(CLI::IsMember({"structured", "oracle"}));
    fct->add_flag("--cross-check", cross_check, "compare structured and oracle results");
    add_common(fct);

    CLI::App* cyc = app.add_subcommand("cyclo", "cyclotomic polynomial over F_q");
    add_field_options(cyc, fopts);
    cyc->add_option("--d", d, "cyclotomic index")->required();
    add_common(cyc);

    CLI::App* ord = app.add_subcommand("order", "multiplicative order of an integer");
    ord->add_option("--base", order_base, "the base a")->required();
    ord->add_option("--mod", order_mod, "the modulus d")->required();
    ord->add_flag("--verify", verify, "compare the closed forms against brute force");
    add_common(ord);

    CLI::App* en = app.add_subcommand("enumerate", "list sparse exponents up to a bound");
    add_field_options(en, fopts);
    en->add_option("--bound", bound, "inclusive bound")->required();
    add_common(en);

    CLI::App* wit = app.add_subcommand("witness", "heavy factor witnessing non-sparsity");
    add_field_options(wit, fopts);
    wit->add_option("--p", p, "odd prime not dividing q^2 - 1")->required();
    add_common(wit);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kAffirmative : kError;  // --help exits 0, bad usage 2
    }

    try {
        if (app.got_subcommand(check)) return run_check(fopts, n, verify, seed, format, out_path);
        if (app.got_subcommand(fct))
            return run_factor(fopts, n, method, cross_check, seed, format, out_path);
        if (app.got_subcommand(cyc)) return run_cyclo(fopts, d, format, out_path);
        if (app.got_subcommand(ord)) return run_order(order_base, order_mod, verify, format, out_path);
        if (app.got_subcommand(en)) return run_enumerate(fopts, bound, format, out_path);
        if (app.got_subcommand(wit)) return run_witness(fopts, p, seed, format, out_path);
    } catch (const CharacteristicDividesN& e) {
        std::cerr << "characteristic " << e.characteristic << " divides n; coprime part "
                  << e.coprime_part << "\n";
        return kError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
