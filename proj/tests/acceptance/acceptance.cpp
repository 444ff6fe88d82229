// Acceptance suite: one PASS/FAIL line per criterion. Every tolerance is exact
// unless stated next to its constant.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "app/commands.hpp"
#include "app/suites.hpp"
#include "esymlab/aggregates.hpp"
#include "esymlab/builtins.hpp"
#include "esymlab/error.hpp"
#include "esymlab/expr.hpp"
#include "esymlab/modlab.hpp"
#include "esymlab/prelab.hpp"
#include "esymlab/conjectures.hpp"
#include "esymlab/sequences.hpp"
#include "esymlab/series.hpp"
#include "esymlab/symfun.hpp"
#include "oracles/oracles.hpp"

namespace {

using namespace esymlab;
namespace fs = std::filesystem;

constexpr double kTheorem1RuntimeLimitSeconds = 60.0;
constexpr std::size_t kTheorem1NMax = 60;
constexpr std::size_t kE2p4ExactMax = 600;
constexpr std::size_t kRecurrenceLast = 578;
constexpr std::size_t kPeriodWindow = 5000;
constexpr std::size_t kParityNMax = 300;
constexpr unsigned kParityJMax = 8;
constexpr std::size_t kClassifyNMax = 120;
constexpr std::size_t kGfOrder = 300;
constexpr std::size_t kB12GfOrder = 1000;
constexpr std::size_t kB12NMax = 40;
constexpr std::size_t kB22EnumNMax = 40;
constexpr std::size_t kB22FastNMax = 250;
constexpr std::size_t kLogConcavityLast = 100;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
    std::string detail() const {
        std::string s;
        const auto& items = pass ? notes : failures;
        for (std::size_t i = 0; i < items.size() && i < 8; ++i) s += (i ? "; " : "") + items[i];
        if (items.size() > 8) s += "; ... " + std::to_string(items.size() - 8) + " more";
        if (!pass)
            for (const auto& n : notes) s += " | " + n;
        return s;
    }
};

const BigSeq& e2p4_exact() {
    static const BigSeq s = compute_sequence("e2p4", {}, kE2p4ExactMax);
    return s;
}

Outcome criterion_1() {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const std::tuple<PartSource, const char*> sources[] = {
        {PartSource::all(), "p"}, {PartSource::odd(), "Q"}, {PartSource::binary(), "B"}};
    std::map<std::string, BigSeq> dp;
    for (const auto& [src, tag] : sources) {
        for (unsigned j = 2; j <= 3; ++j) {
            const std::string name = "e" + std::to_string(j) + tag;
            dp[name] = ejp_dp(kTheorem1NMax, j, src, LengthConstraint::any());
            for (Part n = 1; n <= kTheorem1NMax; ++n) {
                const BigInt brute = ejp_bruteforce(n, j, src, LengthConstraint::any());
                const BigInt closed = ejp_theorem1(n, j, src);
                o.expect(closed == brute && dp[name].at(n) == brute, name + "(" + std::to_string(n) + ")");
            }
        }
    }
    o.expect(dp["e2p"].at(4) == 18, "e2p(4) = 18");
    o.expect(dp["e3p"].at(4) == 6, "e3p(4) = 6");
    o.expect(dp["e2Q"].at(5) == 17, "e2Q(5) = 17");
    o.expect(dp["e2B"].at(6) == 71, "e2B(6) = 71");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.expect(secs < kTheorem1RuntimeLimitSeconds, "runtime " + std::to_string(secs) + " s");
    std::ostringstream note;
    note.precision(2);
    note << std::fixed << "3 sources x j in {2,3} x n in [1,60], anchors ok, " << secs << " s";
    o.notes.push_back(note.str());
    return o;
}

Outcome criterion_2() {
    Outcome o;
    const std::pair<std::uint64_t, std::size_t> cases[] = {{2, 48}, {3, 54}, {4, 96}};
    for (const auto& [m, p] : cases) {
        const ResidueSeq r = reduce(e2p4_exact(), m);
        const auto bad = first_period_violation(r, p);
        o.expect(!bad, "mod " + std::to_string(m) + " congruence fails at n=" + std::to_string(bad.value_or(0)));
        try {
            const PeriodReport rep = detect_period(r);
            o.expect(rep.period == p && rep.burn_in == 0,
                     "mod " + std::to_string(m) + ": detected " + std::to_string(rep.period) + " burn-in " +
                         std::to_string(rep.burn_in));
            o.notes.push_back("mod " + std::to_string(m) + " -> " + std::to_string(rep.period) + ", n0=" +
                              std::to_string(rep.burn_in));
        } catch (const NoPeriodFound& e) {
            o.expect(false, e.what());
        }
    }
    return o;
}

Outcome criterion_3() {
    Outcome o;
    const auto r = verify_linear_recurrence(e2p4_exact(), LinRecurrence::e2p4(), 0, kRecurrenceLast);
    if (const auto* f = std::get_if<RecurrenceFailure>(&r)) o.expect(false, "first failure at n=" + std::to_string(f->n));
    o.notes.push_back("holds on [0, 578]");
    return o;
}

Outcome criterion_4() {
    Outcome o;
    std::size_t matched = 0;
    for (const auto& [m, p] : app::conjectured_period_table()) {
        const ResidueSeq r = extend_mod(e2p4_exact(), LinRecurrence::e2p4(), m, kPeriodWindow);
        try {
            const PeriodReport rep = detect_period(r);
            o.expect(rep.period == p, "m=" + std::to_string(m) + ": table " + std::to_string(p) + ", detected " +
                                          std::to_string(rep.period) + " (n0=" + std::to_string(rep.burn_in) + ")");
            matched += rep.period == p ? 1 : 0;
        } catch (const NoPeriodFound&) {
            o.expect(false, "m=" + std::to_string(m) + ": table " + std::to_string(p) + ", no period within window " +
                                std::to_string(kPeriodWindow));
        }
        if (const auto bad = first_period_violation(r, p))
            o.notes.push_back("m=" + std::to_string(m) + ": shift by " + std::to_string(p) + " first fails at n=" +
                              std::to_string(*bad));
    }
    o.notes.insert(o.notes.begin(), std::to_string(matched) + "/" +
                                        std::to_string(app::conjectured_period_table().size()) +
                                        " entries match; indices > 600 conditional on conjectured recurrence");
    return o;
}

Outcome criterion_5() {
    Outcome o;
    for (unsigned j = 2; j <= kParityJMax; ++j) {
        const BigSeq ejB = ejp_dp(kParityNMax, j, PartSource::binary(), LengthConstraint::any());
        for (std::uint64_t n = 2; n <= kParityNMax; ++n) {
            o.expect(parity_ejB(n, j, ejB).pass, "parity j=" + std::to_string(j) + " n=" + std::to_string(n));
            if (j == 2) o.expect(mpz_odd_p(ejB.at(n).get_mpz_t()) != 0, "e2B odd at n=" + std::to_string(n));
            if (j == 3) {
                const BigInt d = ejB.at(n) - static_cast<unsigned long>(n);
                o.expect(mpz_even_p(d.get_mpz_t()) != 0, "e3B = n mod 2 at n=" + std::to_string(n));
            }
        }
    }
    const auto b = count_partitions_table(kParityNMax, PartSource::binary(), LengthConstraint::any());
    for (std::uint64_t n = 3; n <= kParityNMax; ++n) o.expect(mod4_binary_sums(n, b).pass, "mod 4 sums n=" + std::to_string(n));
    o.notes.push_back("parity for j in [2,8], n in [2,300]; mod-4 sums for n in [3,300]");
    return o;
}

Outcome criterion_6() {
    Outcome o;
    std::size_t total = 0;
    for (Part n = 4; n <= kClassifyNMax; ++n) {
        for_each_partition(n, PartSource::all(), LengthConstraint::exactly(4), [&](const Partition& p) {
            ++total;
            const BigInt e2 = oracle::elem_by_subsets({p.parts().begin(), p.parts().end()}, 2);
            for (std::uint64_t m = 2; m <= 4; ++m) {
                const BigInt r = e2 % m;
                if (classify_e2_mod(p, m) != r.get_ui()) o.expect(false, to_string(p) + " mod " + std::to_string(m));
            }
        });
    }
    o.notes.push_back(std::to_string(total) + " four-part partitions x 3 moduli");
    return o;
}

Outcome criterion_7() {
    Outcome o;
    auto same = [&](const std::string& what, const TruncatedSeries& a, const TruncatedSeries& b) {
        const auto r = check_identity(a, b);
        if (const auto* m = std::get_if<FirstMismatch>(&r))
            o.expect(false, what + " at q^" + std::to_string(m->exponent));
        else
            o.expect(std::min(a.order(), b.order()) >= 200, what + " order below 200");
    };
    auto lambert = [](const PartSource& src, unsigned j, std::size_t order) {
        TruncatedSeries s(order);
        for (Part a : src.parts_up_to(order)) {
            BigInt w;
            mpz_ui_pow_ui(w.get_mpz_t(), a, j);
            s = s + TruncatedSeries::monomial(a, w, order).divide_one_minus_q_pow(a);
        }
        return s;
    };
    for (const auto& src : {PartSource::all(), PartSource::odd(), PartSource::binary()}) {
        const TruncatedSeries prod = product_over_source(src, kGfOrder);
        const auto counts = count_partitions_table(kGfOrder, src, LengthConstraint::any());
        same("product coefficients " + src.name(), TruncatedSeries::from_coeffs(counts, kGfOrder), prod);
        for (unsigned j = 1; j <= 3; ++j) {
            const TruncatedSeries lam = lambert(src, j, kGfOrder);
            same("power-sum totals " + src.name() + " j=" + std::to_string(j),
                 TruncatedSeries::from_coeffs(power_sum_total_table(kGfOrder, j, src), kGfOrder), prod * lam);
            const BigSeq sigma = sigma_restricted_seq(kGfOrder, j, src);
            std::vector<BigInt> coeffs{0};
            coeffs.insert(coeffs.end(), sigma.values.begin(), sigma.values.end());
            same("divisor series " + src.name() + " j=" + std::to_string(j), TruncatedSeries::from_coeffs(coeffs, kGfOrder),
                 lam);
        }
    }
    const auto lhs2 = TruncatedSeries::from_coeffs(e2p4_exact().values, kGfOrder).reduced(2);
    same("e2p4 mod 2", lhs2,
         eval_expr(parse_expr("q^6/((1-q^2)^2*(1-q^4)^2)+q^5/((1-q^2)^2*(1-q^4)*(1-q^6))"), kGfOrder, Ring::mod(2)));
    const auto lhs3 = TruncatedSeries::from_coeffs(e2p4_exact().values, kGfOrder).reduced(3);
    same("e2p4 mod 3", lhs3,
         eval_expr(parse_expr("(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2)+2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)"), kGfOrder,
                   Ring::mod(3)));
    same("b12 F = G", TruncatedSeries::from_coeffs(b12_recurrence_table(kB12GfOrder), kB12GfOrder),
         eval_expr(parse_expr("q^2/(1-q)*#binaryOddProd"), kB12GfOrder, Ring::exact()));
    o.notes.push_back("23 identities at order 300, b12 at order 1000");
    return o;
}

Outcome criterion_8() {
    Outcome o;
    o.expect(b12(1) == 0 && b12(2) == 1, "b12(1) = 0, b12(2) = 1");
    const auto rec = b12_recurrence_table(kB12NMax);
    for (Part n = 1; n <= kB12NMax; ++n) o.expect(b12(n) == rec[n], "b12 n=" + std::to_string(n));
    for (Part n = 0; n <= kB22EnumNMax; ++n) o.expect(b22_delta_check(n).pass, "b22 explicit n=" + std::to_string(n));
    const auto b22v = b22_fast_table(2 * kB22FastNMax + 2);
    const auto b12v = b12_recurrence_table(kB22FastNMax + 1);
    for (Part n = 0; n <= kB22FastNMax; ++n)
        o.expect(b22_delta_check(n, b22v, b12v).pass, "b22 fast n=" + std::to_string(n));
    o.notes.push_back("b12 n<=40; b22 differences n<=40 explicit, n<=250 fast; b22(0)=b22(1)=0 convention");
    return o;
}

Outcome criterion_9() {
    Outcome o;
    auto scan = [&](const std::string& label, Part n_max, unsigned j, const PartSource& src, LengthWindow w) {
        for (Part n = 0; n <= n_max; ++n) {
            const auto r = injectivity_scan(n, j, src, w);
            if (const auto* c = std::get_if<Collision>(&r))
                o.expect(false, label + " n=" + std::to_string(n) + ": " + to_string(c->first) + " vs " +
                                    to_string(c->second));
        }
    };
    scan("pre_2 on P(n)", 28, 2, PartSource::all(), {});
    scan("pre_2 on B(n)", 40, 2, PartSource::binary(), {});
    scan("pre_2 on length <= 3", 60, 2, PartSource::all(), {0, 3});
    scan("pre_3 on length >= 4", 20, 3, PartSource::all(), {4});
    o.notes.push_back("no collisions");
    return o;
}

Outcome criterion_10() {
    Outcome o;
    std::vector<OddDistinctCount> ones;
    for (Part n = 0; n <= 60; ++n) {
        ones.push_back(odd_distinct_counts(n, 1));
        o.expect(ones[n].odd == ones[n].distinct, "o_1 = d_1 at n=" + std::to_string(n));
    }
    for (Part n = 0; n <= 35; ++n) {
        const auto two = odd_distinct_counts(n, 2);
        o.expect(two.odd >= two.distinct, "o_2 >= d_2 at n=" + std::to_string(n));
        if (n == 0) {
            o.expect(two.odd == 1 && ones[0].odd == 1, "o_2(0) = o_1(0) = 1");
        } else {
            o.expect(two.odd - ones[n].odd == (n % 2 == 0 ? 1u : 0u), "o_2 - o_1 at n=" + std::to_string(n));
        }
    }
    for (Part n = 21; n <= 30; ++n) {
        const auto three = odd_distinct_counts(n, 3);
        o.expect(three.odd >= three.distinct, "o_3 >= d_3 at n=" + std::to_string(n));
    }
    o.notes.push_back("o_2 - o_1 = [n even] checked for 1 <= n <= 35; n = 0 has no one-part partition, o_2(0) = o_1(0) = 1");
    return o;
}

Outcome criterion_11() {
    Outcome o;
    const std::size_t last = kLogConcavityLast;
    const BigSeq p = compute_sequence("p", {}, last + 1);
    o.expect(logconcavity_scan(p, 26, last).holds(), "p(n) on [26,100]");
    std::vector<BigSeq> e(6);
    for (unsigned j = 1; j <= 5; ++j) e[j] = ejp_dp(last + 1, j, PartSource::all(), LengthConstraint::any());
    const auto v1 = logconcavity_scan(e[1], 1, last);
    const auto v2 = logconcavity_scan(e[2], 1, last);
    o.expect(v1.max_violation().value_or(0) <= 23, "e1p violation beyond 23");
    o.expect(v2.max_violation().value_or(0) <= 17, "e2p violation beyond 17");
    for (unsigned j = 3; j <= 5; ++j) o.expect(logconcavity_scan(e[j], 1, last).holds(), "e" + std::to_string(j) + "p");
    for (unsigned j = 1; j <= 5; ++j) {
        o.expect(ratio_logconcavity_scan(e[j], p, RatioVariant::F, 2, last).holds(), "F j=" + std::to_string(j));
        o.expect(ratio_logconcavity_scan(e[j], p, RatioVariant::FOverN, 2, last).holds(), "F/n j=" + std::to_string(j));
    }
    o.notes.push_back("e1p last violation " + std::to_string(v1.max_violation().value_or(0)) + ", e2p last violation " +
                      std::to_string(v2.max_violation().value_or(0)));
    return o;
}

std::string read_all(const fs::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome criterion_12() {
    Outcome o;
    const fs::path root = fs::temp_directory_path() / ("esymlab_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);

    // cache round trip
    {
        app::SequenceStore store(root / "roundtrip");
        for (const auto& name : registered_sequences()) {
            const BigSeq s = store.get(name, 100);
            const fs::path file = store.file_for(name, s.params);
            const std::string bytes = read_all(file);
            const BigSeq back = app::SequenceStore::read_file(file);
            o.expect(back.values == compute_sequence(name, {}, 100).values, "round trip values " + name);
            const fs::path again = root / "again.tsv";
            app::SequenceStore::write_file(again, back);
            o.expect(read_all(again) == bytes, "round trip bytes " + name);
        }
    }

    // fault injection
    std::vector<std::string> suites = app::standard_suites();
    suites.insert(suites.end(), app::extra_suites().begin(), app::extra_suites().end());
    for (const auto& suite : suites) {
        const fs::path dir = root / suite;
        app::VerifyOptions v;
        v.suite = suite;
        if (suite == "theorem1" || suite == "residue-classes" || suite == "injectivity" || suite == "odd-distinct")
            v.suite_options.n_max = 20;
        if (suite == "b22") v.suite_options.n_max = 10;
        std::ostringstream sink;
        {
            app::SequenceStore store(dir);
            const int clean = app::cmd_verify(v, store, sink, sink);
            o.expect(clean == app::kExitOk || clean == app::kExitConjecture, suite + " clean run exit " + std::to_string(clean));
        }
        for (const auto& entry : fs::directory_iterator(dir)) {
            std::ifstream in(entry.path());
            std::vector<std::string> lines;
            for (std::string l; std::getline(in, l);) lines.push_back(l);
            in.close();
            for (auto& l : lines)
                if (l.rfind("5\t", 0) == 0) l = "5\t" + BigInt(BigInt(l.substr(2), 10) + 1).get_str();
            std::ofstream out(entry.path(), std::ios::trunc);
            for (const auto& l : lines) out << l << '\n';
        }
        app::SequenceStore store(dir);
        const int dirty = app::cmd_verify(v, store, sink, sink);
        o.expect(dirty == app::kExitFailure, suite + " corrupted cache exit " + std::to_string(dirty));
    }

    // parser
    const std::vector<std::string> displayed = {
        "q^6/((1-q^2)^2*(1-q^4)^2)",
        "1/(1-q)",
        "q^2/(1-q)^3",
        "q*(1+3*q)/(1-q)^3",
        "q^6/((1-q^2)^2*(1-q^4)^2)+q^5/((1-q^2)^2*(1-q^4)*(1-q^6))",
        "(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2)+2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)",
        "q^2/(1-q)*#binaryOddProd",
        "#b12",
        "#e2p4",
        "1+q",
    };
    for (const auto& text : displayed) {
        try {
            const RationalExpr e = parse_expr(text);
            o.expect(parse_expr(e.to_string()) == e, "reprint of " + text);
        } catch (const ParseError& err) {
            o.expect(false, "rejected " + text + ": " + err.what());
        }
    }
    const std::vector<std::pair<std::string, std::size_t>> malformed = {
        {"q/(1-2*q)", 2}, {"1/(1+q)", 2}, {"1/(q-1)", 2}, {"1/(1-q)^0", 2}, {"1/q", 2}, {"1/(1-q^0)", 2}, {"1/(1-q", 6}};
    for (const auto& [text, pos] : malformed) {
        try {
            parse_expr(text);
            o.expect(false, "accepted " + text);
        } catch (const ParseError& err) {
            o.expect(err.position() == pos && !err.expected().empty(),
                     text + " position " + std::to_string(err.position()));
        }
    }
    fs::remove_all(root);
    o.notes.push_back("cache bit-exact for " + std::to_string(registered_sequences().size()) + " sequences; " +
                      std::to_string(suites.size()) + " suites exit 1 on corruption; parser " +
                      std::to_string(displayed.size()) + " accepted, " + std::to_string(malformed.size()) + " rejected");
    return o;
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
    static const std::vector<std::pair<std::string, std::function<Outcome()>>> c = {
        {"closed convolution = enumeration = knapsack DP", criterion_1},
        {"e2p4 periods 48, 54, 96", criterion_2},
        {"order-22 recurrence on [0,578]", criterion_3},
        {"conjectural period table, window 5000", criterion_4},
        {"binary parity and mod-4 sums", criterion_5},
        {"residue classes of e_2 on four parts", criterion_6},
        {"generating-function identities", criterion_7},
        {"b12 and b22 sequences", criterion_8},
        {"pre_j injectivity", criterion_9},
        {"odd and distinct image counts", criterion_10},
        {"log-concavity", criterion_11},
        {"cache, fault injection, parser", criterion_12},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"esymlab acceptance suite"};
    std::vector<int> selected;
    app.add_option("--criterion", selected, "Criterion numbers to run (default: all)")->check(CLI::Range(1, 12));
    CLI11_PARSE(app, argc, argv);
    if (selected.empty())
        for (int i = 1; i <= 12; ++i) selected.push_back(i);

    bool all_pass = true;
    for (int i : selected) {
        const auto& [title, fn] = criteria()[static_cast<std::size_t>(i - 1)];
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        all_pass &= o.pass;
        std::cout << "criterion " << i << " [" << (o.pass ? "PASS" : "FAIL") << "] " << title << ": " << o.detail()
                  << std::endl;
    }
    return all_pass ? 0 : 1;
}
