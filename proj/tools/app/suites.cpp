#include "suites.hpp"

#include <functional>
#include <sstream>

#include "esymlab/builtins.hpp"
#include "esymlab/conjectures.hpp"
#include "esymlab/expr.hpp"
#include "esymlab/modlab.hpp"
#include "esymlab/prelab.hpp"
#include "esymlab/series.hpp"
#include "esymlab/symfun.hpp"
#include "parallel.hpp"
#include "second_route.hpp"

namespace esymlab::app {

namespace {

using Kind = CheckKind;

struct Ctx {
    SequenceStore& store;
    const SuiteOptions& opt;
    SuiteReport& report;
};

std::string range_text(std::size_t a, std::size_t b) {
    return "n in [" + std::to_string(a) + ", " + std::to_string(b) + "]";
}

std::string big(const BigInt& v) { return v.get_str(); }

/// Reads a sequence through the store and checks it against the independent route.
BigSeq load(Ctx& c, const std::string& name, std::size_t n_max, const SequenceParams& params = {}) {
    BigSeq seq = c.store.get(name, params, n_max);
    const std::size_t upto = std::min(n_max, second_route_limit(name));
    const BigSeq other = second_route(name, params, upto);
    std::string label = name;
    if (canonical_params(name, params) != "none") label += "(" + canonical_params(name, params) + ")";
    Tally t("stored " + label + " = independent recomputation", Kind::Consistency);
    for (std::size_t n = seq.first; n <= upto; ++n)
        t.check(seq.at(n) == other.at(n), n, big(seq.at(n)) + " vs " + big(other.at(n)));
    t.flush(c.report, range_text(seq.first, upto));
    return seq;
}

void suite_theorem1(Ctx& c) {
    const std::size_t n_max = c.opt.n_max.value_or(60);
    struct Spec {
        const char* name;
        unsigned j;
        PartSource src;
    };
    const Spec specs[] = {
        {"e2p", 2, PartSource::all()}, {"e3p", 3, PartSource::all()},    {"e2Q", 2, PartSource::odd()},
        {"e3Q", 3, PartSource::odd()}, {"e2B", 2, PartSource::binary()}, {"e3B", 3, PartSource::binary()},
    };
    std::map<std::string, BigSeq> loaded;
    for (const auto& s : specs) {
        const BigSeq dp = load(c, s.name, std::max<std::size_t>(n_max, 6));
        loaded[s.name] = dp;
        const auto rows = parallel_map(n_max, c.opt.jobs, [&](std::size_t i) {
            const Part n = i + 1;
            return std::pair(ejp_theorem1(n, s.j, s.src), ejp_bruteforce(n, s.j, s.src, LengthConstraint::any()));
        });
        Tally closed(std::string("closed convolution = enumeration for ") + s.name, Kind::Theorem);
        Tally stored(std::string("knapsack DP = enumeration for ") + s.name, Kind::Consistency);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& [th, brute] = rows[i];
            closed.check(th == brute, i + 1, big(th) + " vs " + big(brute));
            stored.check(dp.at(i + 1) == brute, i + 1, big(dp.at(i + 1)) + " vs " + big(brute));
        }
        closed.flush(c.report, range_text(1, n_max));
        stored.flush(c.report, range_text(1, n_max));
    }
    const std::tuple<const char*, std::size_t, long> anchors[] = {
        {"e2p", 4, 18}, {"e3p", 4, 6}, {"e2Q", 5, 17}, {"e2B", 6, 71}};
    for (const auto& [name, n, v] : anchors) {
        const BigInt& got = loaded[name].at(n);
        c.report.add(std::string(name) + "(" + std::to_string(n) + ") = " + std::to_string(v), Kind::Consistency,
                     got == v, "got " + big(got));
    }
}

void suite_th0(Ctx& c) {
    const std::size_t n_max = c.opt.n_max.value_or(600);
    const BigSeq seq = load(c, "e2p4", n_max);
    const std::pair<std::uint64_t, std::size_t> cases[] = {{2, 48}, {3, 54}, {4, 96}};
    for (const auto& [m, p] : cases) {
        const ResidueSeq r = reduce(seq, m);
        const std::string tag = "mod " + std::to_string(m);
        const auto bad = first_period_violation(r, p);
        c.report.add("e2p4(n+" + std::to_string(p) + ") = e2p4(n) " + tag, Kind::Theorem, !bad,
                     bad ? "fails at n=" + std::to_string(*bad) : range_text(0, n_max - p));
        try {
            const PeriodReport rep = detect_period(r);
            c.report.add("minimal period " + tag + " is " + std::to_string(p) + " with burn-in 0", Kind::Theorem,
                         rep.period == p && rep.pure(),
                         "detected " + std::to_string(rep.period) + ", burn-in " + std::to_string(rep.burn_in) +
                             ", window " + std::to_string(rep.window));
        } catch (const NoPeriodFound& e) {
            c.report.add("minimal period " + tag + " is " + std::to_string(p), Kind::Theorem, false, e.what());
        }
    }
    if (n_max >= 22) {
        const auto rec = verify_linear_recurrence(seq, LinRecurrence::e2p4(), 0, n_max - 22);
        const auto* fail = std::get_if<RecurrenceFailure>(&rec);
        c.report.add("order-22 recurrence for e2p4", Kind::Conjecture, fail == nullptr,
                     fail ? "first failure at n=" + std::to_string(fail->n) : range_text(0, n_max - 22));
    }
}

void suite_th3(Ctx& c) {
    const std::size_t n_max = std::max<std::size_t>(c.opt.n_max.value_or(300), 3);
    const BigSeq e2B = load(c, "e2B", n_max);
    const BigSeq e3B = load(c, "e3B", n_max);
    const BigSeq pB = load(c, "pB", n_max);
    for (unsigned j = 2; j <= 8; ++j) {
        const BigSeq seq = j == 2 ? e2B : j == 3 ? e3B : ejp_dp(n_max, j, PartSource::binary(), LengthConstraint::any());
        Tally t("e" + std::to_string(j) + "B(n) = C(n-2, " + std::to_string(j - 2) + ") mod 2", Kind::Theorem);
        for (std::size_t n = 2; n <= n_max; ++n) t.check(parity_ejB(n, j, seq).pass, n);
        t.flush(c.report, range_text(2, n_max));
    }
    Tally odd("e2B(n) is odd", Kind::Theorem);
    Tally e3("e3B(n) = n mod 2", Kind::Theorem);
    for (std::size_t n = 2; n <= n_max; ++n) {
        odd.check(mpz_odd_p(e2B.at(n).get_mpz_t()) != 0, n);
        e3.check((e3B.at(n) - static_cast<unsigned long>(n)) % 2 == 0, n);
    }
    odd.flush(c.report, range_text(2, n_max));
    e3.flush(c.report, range_text(2, n_max));
    Tally m4("binary partition sums vanish mod 4", Kind::Theorem);
    for (std::size_t n = 3; n <= n_max; ++n) {
        const Check ch = mod4_binary_sums(n, pB.values);
        m4.check(ch.pass, n, "value " + big(ch.lhs));
    }
    m4.flush(c.report, range_text(3, n_max));
}

void suite_residue_classes(Ctx& c) {
    const std::size_t n_max = std::max<std::size_t>(c.opt.n_max.value_or(120), 4);
    const BigSeq e2p4 = load(c, "e2p4", n_max);
    struct Row {
        std::array<bool, 3> ok{true, true, true};
        std::array<std::string, 3> first_bad;
        std::array<BigInt, 3> sum{0, 0, 0};
    };
    const auto rows = parallel_map(n_max - 3, c.opt.jobs, [&](std::size_t i) {
        Row row;
        for_each_partition(i + 4, PartSource::all(), LengthConstraint::exactly(4), [&](const Partition& p) {
            const BigInt e2 = elem_sym(p, 2);
            for (std::uint64_t m = 2; m <= 4; ++m) {
                const std::uint64_t cls = classify_e2_mod(p, m);
                row.sum[m - 2] += cls;
                const BigInt actual = e2 % m;
                if (actual != cls && row.ok[m - 2]) {
                    row.ok[m - 2] = false;
                    row.first_bad[m - 2] = to_string(p);
                }
            }
        });
        return row;
    });
    for (std::uint64_t m = 2; m <= 4; ++m) {
        Tally cls("residue-class rule for e_2 mod " + std::to_string(m), Kind::Theorem);
        Tally sum("sum of classes = e2p4(n) mod " + std::to_string(m), Kind::Consistency);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const std::size_t n = i + 4;
            cls.check(rows[i].ok[m - 2], n, rows[i].first_bad[m - 2]);
            const BigInt diff = rows[i].sum[m - 2] - e2p4.at(n);
            sum.check(mpz_divisible_ui_p(diff.get_mpz_t(), m) != 0, n);
        }
        cls.flush(c.report, "every 4-part partition, " + range_text(4, n_max));
        sum.flush(c.report, range_text(4, n_max));
    }
}

void identity(Ctx& c, const std::string& name, const TruncatedSeries& lhs, const TruncatedSeries& rhs) {
    const auto r = check_identity(lhs, rhs);
    if (const auto* m = std::get_if<FirstMismatch>(&r)) {
        c.report.add(name, Kind::Theorem, false,
                     "mismatch at q^" + std::to_string(m->exponent) + ": " + big(m->lhs) + " vs " + big(m->rhs));
    } else {
        c.report.add(name, Kind::Theorem, true,
                     "match to order " + std::to_string(std::min(lhs.order(), rhs.order())) + " over " +
                         lhs.ring().name());
    }
}

void suite_gf_identities(Ctx& c) {
    const std::size_t order = std::max<std::size_t>(c.opt.order.value_or(300), 1);
    const std::size_t b12_order = std::max<std::size_t>(order, 1000);
    const SequenceSource sequences = [&](const std::string& name, std::size_t n) { return c.store.get(name, n); };
    auto expr = [&](const std::string& text, std::size_t ord, const Ring& ring) {
        return eval_expr(parse_expr(text), ord, ring, [&](const std::string& name, std::size_t o, const Ring& r) {
            return resolve_builtin(name, o, r, sequences);
        });
    };

    const std::tuple<PartSource, const char*, const char*> sources[] = {
        {PartSource::all(), "", "p"}, {PartSource::odd(), "odd", "pQ"}, {PartSource::binary(), "bin", "pB"}};
    for (const auto& [src, suffix, count_name] : sources) {
        const TruncatedSeries prod = product_over_source(src, order);
        for (unsigned j = 1; j <= 3; ++j) {
            const std::string tag = std::to_string(j) + suffix;
            identity(c, "sum of P_" + std::to_string(j) + " over partitions, parts " + src.name(),
                     core_builtin("psum" + tag, order, Ring::exact()),
                     prod * core_builtin("sigma" + tag, order, Ring::exact()));

            const BigSeq sigma = load(c, "sigma", order, SequenceParams{j, src});
            TruncatedSeries lambert(order);
            for (Part a : src.parts_up_to(order)) {
                BigInt w;
                mpz_ui_pow_ui(w.get_mpz_t(), a, j);
                lambert = lambert + TruncatedSeries::monomial(a, w, order).divide_one_minus_q_pow(a);
            }
            std::vector<BigInt> coeffs{0};
            coeffs.insert(coeffs.end(), sigma.values.begin(), sigma.values.end());
            identity(c, "divisor sums sigma_" + std::to_string(j) + " as a Lambert series, parts " + src.name(),
                     TruncatedSeries::from_coeffs(coeffs, order), lambert);
        }
        const BigSeq counts = load(c, count_name, order);
        identity(c, "product over parts " + src.name() + " counts partitions",
                 TruncatedSeries::from_coeffs(counts.values, order), prod);
    }

    load(c, "e2p4", order);
    identity(c, "e2p4 generating function mod 2", expr("#e2p4", order, Ring::mod(2)),
             expr("q^6/((1-q^2)^2*(1-q^4)^2)+q^5/((1-q^2)^2*(1-q^4)*(1-q^6))", order, Ring::mod(2)));
    identity(c, "e2p4 generating function mod 3", expr("#e2p4", order, Ring::mod(3)),
             expr("(q^10+q^8+q^6)/((1-q^3)^2*(1-q^6)^2)+2*(q^9+q^8+q^7)/((1-q^6)*(1-q^3)^3)", order, Ring::mod(3)));

    load(c, "b12", b12_order);
    identity(c, "b12 generating function", expr("#b12", b12_order, Ring::exact()),
             expr("q^2/(1-q)*#binaryOddProd", b12_order, Ring::exact()));
}

void suite_b12(Ctx& c) {
    const std::size_t n_max = std::max<std::size_t>(c.opt.n_max.value_or(40), 2);
    const BigSeq stored = load(c, "b12", n_max);
    const auto direct = parallel_map(n_max, c.opt.jobs, [](std::size_t i) { return b12(i + 1); });
    c.report.add("b12(1) = 0 and b12(2) = 1", Kind::Theorem, direct[0] == 0 && direct[1] == 1,
                 "got " + big(direct[0]) + ", " + big(direct[1]));
    const auto rec = b12_recurrence_table(n_max);
    Tally r("b12 by enumeration = recurrence", Kind::Theorem);
    Tally s("stored b12 = enumeration", Kind::Consistency);
    for (std::size_t n = 1; n <= n_max; ++n) {
        r.check(direct[n - 1] == rec[n], n, big(direct[n - 1]) + " vs " + big(rec[n]));
        s.check(stored.at(n) == direct[n - 1], n);
    }
    r.flush(c.report, range_text(1, n_max));
    s.flush(c.report, range_text(1, n_max));
}

void suite_b22(Ctx& c) {
    const std::size_t n_max = c.opt.n_max.value_or(40);
    const std::size_t fast_max = std::max<std::size_t>(250, n_max);
    const BigSeq b22v = load(c, "b22", 2 * fast_max + 2);
    const BigSeq b12v = load(c, "b12", fast_max + 1);
    const auto slow = parallel_map(n_max + 1, c.opt.jobs, [](std::size_t n) { return b22_delta_check(n); });
    Tally e("b22 differences = b12 (explicit images)", Kind::Theorem);
    for (std::size_t n = 0; n <= n_max; ++n) e.check(slow[n].pass, n, slow[n].detail);
    e.flush(c.report, range_text(0, n_max));
    Tally f("b22 differences = b12 (stored fast table)", Kind::Theorem);
    for (std::size_t n = 0; n <= fast_max; ++n) {
        const Check ch = b22_delta_check(n, b22v.values, b12v.values);
        f.check(ch.pass, n, ch.detail);
    }
    f.flush(c.report, range_text(0, fast_max));
    c.report.note("b22(0) = b22(1) = 0 by convention, so the check starts at n = 0");
}

std::string collision_text(const Collision& col) {
    return to_string(col.first) + " and " + to_string(col.second) + " -> " + to_string(col.image);
}

void suite_injectivity(Ctx& c) {
    const std::size_t n_all = c.opt.n_max.value_or(28);
    const std::size_t n_bin = 40, n_short = 60, n_triple = 20;
    const BigSeq p = load(c, "p", n_all);
    const BigSeq pB = load(c, "pB", n_bin);
    bool any_collision = false;

    auto scan_images = [&](const std::string& label, Kind kind, const PartSource& src, const BigSeq& counts,
                           std::size_t n_max) {
        const auto sets = parallel_map(n_max + 1, c.opt.jobs, [&](std::size_t n) { return image_set(n, 2, src); });
        Tally inj(label, kind);
        Tally pre("pre_2 preimages over " + src.name() + " = " + counts.name + "(n)", Kind::Consistency);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const ImageSet& s = sets[n];
            inj.check(s.collisions.empty(), n, s.collisions.empty() ? "" : collision_text(s.collisions.front()));
            pre.check(BigInt(static_cast<unsigned long>(s.preimage_count)) == counts.at(n), n);
            any_collision |= !s.collisions.empty();
        }
        inj.flush(c.report, "no collisions, " + range_text(0, n_max));
        pre.flush(c.report, range_text(0, n_max));
    };
    scan_images("pre_2 injective on all partitions", Kind::Conjecture, PartSource::all(), p, n_all);
    scan_images("pre_2 injective on binary partitions", Kind::Theorem, PartSource::binary(), pB, n_bin);

    auto scan = [&](const std::string& label, Kind kind, unsigned j, LengthWindow window, std::size_t n_max) {
        const auto res = parallel_map(n_max + 1, c.opt.jobs, [&](std::size_t n) {
            return injectivity_scan(n, j, PartSource::all(), window);
        });
        Tally t(label, kind);
        for (std::size_t n = 0; n <= n_max; ++n) {
            const auto* col = std::get_if<Collision>(&res[n]);
            t.check(col == nullptr, n, col ? collision_text(*col) : "");
            any_collision |= col != nullptr;
        }
        t.flush(c.report, "no collisions, " + range_text(0, n_max));
    };
    scan("pre_2 injective on partitions of length <= 3", Kind::Theorem, 2, {0, 3}, n_short);
    scan("pre_3 injective on partitions of length >= 4", Kind::Conjecture, 3, {4}, n_triple);
    c.report.note(any_collision ? "collisions found" : "no collisions");
}

void suite_odd_distinct(Ctx& c) {
    const std::size_t euler_max = c.opt.n_max.value_or(60);
    const std::size_t pair_max = c.opt.n_max.value_or(35);
    const BigSeq p = load(c, "p", euler_max);
    const BigSeq pQ = load(c, "pQ", euler_max);

    const auto ones = parallel_map(euler_max + 1, c.opt.jobs, [](std::size_t n) { return odd_distinct_counts(n, 1); });
    Tally euler("o_1(n) = d_1(n)", Kind::Theorem);
    Tally oq("o_1(n) = pQ(n)", Kind::Consistency);
    Tally pre("preimages = p(n)", Kind::Consistency);
    for (std::size_t n = 0; n <= euler_max; ++n) {
        euler.check(ones[n].odd == ones[n].distinct, n);
        oq.check(BigInt(static_cast<unsigned long>(ones[n].odd)) == pQ.at(n), n);
        pre.check(BigInt(static_cast<unsigned long>(ones[n].preimages)) == p.at(n), n);
    }
    euler.flush(c.report, range_text(0, euler_max));
    oq.flush(c.report, range_text(0, euler_max));
    pre.flush(c.report, range_text(0, euler_max));

    const auto twos = parallel_map(pair_max + 1, c.opt.jobs, [](std::size_t n) { return odd_distinct_counts(n, 2); });
    Tally shift("o_2(n) - o_1(n) = 1 for even n >= 2, 0 for odd n", Kind::Theorem);
    Tally dom2("o_2(n) >= d_2(n)", Kind::Conjecture);
    std::ostringstream table;
    for (std::size_t n = 0; n <= pair_max; ++n) {
        const auto& t = twos[n];
        const std::size_t expected = n > 0 && n % 2 == 0 ? 1 : 0;
        if (n <= euler_max) shift.check(t.odd == ones[n].odd + expected, n);
        dom2.check(t.odd >= t.distinct, n, std::to_string(t.odd) + " < " + std::to_string(t.distinct));
        table << (n ? " " : "") << n << ":" << t.odd << "/" << t.distinct << "(" << t.odd_nonempty << "/"
              << t.distinct_nonempty << ")";
    }
    shift.flush(c.report, range_text(0, std::min(pair_max, euler_max)));
    dom2.flush(c.report, range_text(0, pair_max));
    c.report.note("the empty image counts as odd and distinct; o_2(0) = o_1(0) = d_2(0) = 1");
    c.report.note("n:o_2/d_2(without the empty image) " + table.str());

    Tally dom3("o_3(n) >= d_3(n)", Kind::Conjecture);
    const auto threes = parallel_map(10, c.opt.jobs, [](std::size_t i) { return odd_distinct_counts(21 + i, 3); });
    for (std::size_t i = 0; i < threes.size(); ++i) dom3.check(threes[i].odd >= threes[i].distinct, 21 + i);
    dom3.flush(c.report, range_text(21, 30));
}

void suite_logconcavity(Ctx& c) {
    const std::size_t n_max = std::max<std::size_t>(c.opt.n_max.value_or(100), 27);
    const BigSeq p = load(c, "p", n_max + 1);
    std::vector<BigSeq> e(6);
    e[2] = load(c, "e2p", n_max + 1);
    e[3] = load(c, "e3p", n_max + 1);
    for (unsigned j : {1u, 4u, 5u}) e[j] = ejp_dp(n_max + 1, j, PartSource::all(), LengthConstraint::any());

    auto describe = [](const ViolationReport& r) {
        if (r.holds()) return std::string("no violations on ") + range_text(r.first, r.last);
        std::string s = std::to_string(r.violations.size()) + " violations, last at n=" + std::to_string(r.violations.back());
        return s;
    };
    const auto pr = logconcavity_scan(p, 26, n_max);
    c.report.add("p(n) log-concave", Kind::Theorem, pr.holds(), describe(pr));
    const std::pair<unsigned, std::size_t> thresholds[] = {{1, 23}, {2, 17}};
    for (const auto& [j, limit] : thresholds) {
        const auto r = logconcavity_scan(e[j], 1, n_max);
        c.report.add("e" + std::to_string(j) + "p log-concave for n > " + std::to_string(limit), Kind::Conjecture,
                     !r.max_violation() || *r.max_violation() <= limit, describe(r));
    }
    for (unsigned j = 3; j <= 5; ++j) {
        const auto r = logconcavity_scan(e[j], 1, n_max);
        c.report.add("e" + std::to_string(j) + "p log-concave", Kind::Conjecture, r.holds(), describe(r));
    }
    for (unsigned j = 1; j <= 5; ++j) {
        for (RatioVariant v : {RatioVariant::F, RatioVariant::FOverN}) {
            const auto r = ratio_logconcavity_scan(e[j], p, v, 2, n_max);
            const std::string f = "e" + std::to_string(j) + "p/p" + (v == RatioVariant::FOverN ? "/n" : "");
            c.report.add(f + " log-concave", Kind::Conjecture, r.holds(), describe(r));
        }
    }
    c.report.note("ratio scans start at n = 2 so that n - 1 >= 1");
}

void suite_period_table(Ctx& c) {
    const std::size_t window = c.opt.n_max.value_or(5000);
    const BigSeq prefix = load(c, "e2p4", 600);
    const auto& table = conjectured_period_table();
    const auto found = parallel_map(table.size(), c.opt.jobs, [&](std::size_t i) -> std::optional<PeriodReport> {
        const ResidueSeq r = extend_mod(prefix, LinRecurrence::e2p4(), table[i].first, window);
        try {
            return detect_period(r);
        } catch (const NoPeriodFound&) {
            return std::nullopt;
        }
    });
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto& [m, p] = table[i];
        const auto& rep = found[i];
        const std::string detail =
            rep ? "detected " + std::to_string(rep->period) + ", burn-in " + std::to_string(rep->burn_in)
                : "no period within window " + std::to_string(window);
        c.report.add("e2p4 mod " + std::to_string(m) + " has minimal period " + std::to_string(p), Kind::Conjecture,
                     rep && rep->period == p, detail);
    }
    c.report.note("indices 601.." + std::to_string(window - 1) +
                  " come from the recurrence: conditional on conjectured recurrence");
}

const std::map<std::string, std::function<void(Ctx&)>>& registry() {
    static const std::map<std::string, std::function<void(Ctx&)>> r = {
        {"theorem1", suite_theorem1},
        {"th0", suite_th0},
        {"th3", suite_th3},
        {"residue-classes", suite_residue_classes},
        {"gf-identities", suite_gf_identities},
        {"b12", suite_b12},
        {"b22", suite_b22},
        {"injectivity", suite_injectivity},
        {"odd-distinct", suite_odd_distinct},
        {"logconcavity", suite_logconcavity},
        {"period-table", suite_period_table},
    };
    return r;
}

void run_one(const std::string& name, SequenceStore& store, const SuiteOptions& options, SuiteReport& report) {
    Ctx c{store, options, report};
    try {
        registry().at(name)(c);
    } catch (const CacheCorrupt& e) {
        report.add("sequence cache readable", Kind::Consistency, false, e.what());
    } catch (const std::exception& e) {
        report.add("suite completed", Kind::Consistency, false, e.what());
    }
}

}  // namespace

const std::vector<std::pair<std::uint64_t, std::size_t>>& conjectured_period_table() {
    static const std::vector<std::pair<std::uint64_t, std::size_t>> t = {
        {2, 48},    {3, 54},   {4, 96},   {5, 300},  {6, 432},  {7, 84},   {8, 192},  {9, 324},  {10, 1150},
        {11, 132},  {12, 864}, {13, 156}, {14, 336}, {16, 384}, {17, 204}, {18, 1246}, {19, 228}, {21, 756},
        {22, 528},  {23, 276}, {26, 624}, {27, 972}, {28, 672}, {29, 348}, {31, 372}, {37, 444},
    };
    return t;
}

const std::vector<std::string>& standard_suites() {
    static const std::vector<std::string> s = {"theorem1",     "th0", "th3",         "residue-classes",
                                               "gf-identities", "b12", "b22",         "injectivity",
                                               "odd-distinct", "logconcavity"};
    return s;
}

const std::vector<std::string>& extra_suites() {
    static const std::vector<std::string> s = {"period-table"};
    return s;
}

SuiteReport run_suite(const std::string& name, SequenceStore& store, const SuiteOptions& options) {
    SuiteReport report;
    report.suite = name;
    if (name == "all") {
        for (const auto& s : standard_suites()) {
            SuiteReport part;
            part.suite = s;
            run_one(s, store, options, part);
            for (auto& ch : part.checks) {
                ch.name = s + ": " + ch.name;
                report.checks.push_back(std::move(ch));
            }
            for (auto& n : part.notes) report.notes.push_back(s + ": " + n);
        }
        return report;
    }
    if (!registry().contains(name)) throw UnknownSuite("unknown suite '" + name + "'");
    run_one(name, store, options, report);
    return report;
}

}  // namespace esymlab::app
