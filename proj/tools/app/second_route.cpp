#include "second_route.hpp"

#include "esymlab/expr.hpp"
#include "esymlab/prelab.hpp"
#include "esymlab/series.hpp"

namespace esymlab::app {

namespace {

constexpr std::size_t kB22ExplicitLimit = 40;

BigSeq from_series(const std::string& name, const TruncatedSeries& s, std::size_t n_max) {
    return BigSeq{name, "none", 0, {s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(n_max + 1)}};
}

}  // namespace

std::size_t second_route_limit(const std::string& name) {
    return name == "b22" ? kB22ExplicitLimit : static_cast<std::size_t>(-1);
}

BigSeq four_part_newton(unsigned j, std::size_t n_max) {
    if (j != 2 && j != 3) throw std::invalid_argument("four_part_newton needs j in {2,3}");
    constexpr std::size_t L = 4;
    std::vector<std::vector<BigInt>> cnt(L + 1, std::vector<BigInt>(n_max + 1, 0));
    auto s2 = cnt, s3 = cnt;
    cnt[0][0] = 1;
    for (std::size_t x = 1; x <= n_max; ++x) {
        const BigInt x2 = BigInt(static_cast<unsigned long>(x)) * static_cast<unsigned long>(x);
        const BigInt x3 = x2 * static_cast<unsigned long>(x);
        for (std::size_t s = x; s <= n_max; ++s) {
            for (std::size_t k = 1; k <= L; ++k) {
                const BigInt& c = cnt[k - 1][s - x];
                if (c == 0) continue;
                cnt[k][s] += c;
                s2[k][s] += s2[k - 1][s - x] + x2 * c;
                s3[k][s] += s3[k - 1][s - x] + x3 * c;
            }
        }
    }
    BigSeq out{j == 2 ? "e2p4" : "e3p4", "none", 0, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BigInt nn(static_cast<unsigned long>(n));
        BigInt v;
        if (j == 2) {
            v = nn * nn * cnt[L][n] - s2[L][n];
            v /= 2;
        } else {
            v = nn * nn * nn * cnt[L][n] - 3 * nn * s2[L][n] + 2 * s3[L][n];
            v /= 6;
        }
        out.values.push_back(v);
    }
    return out;
}

BigSeq second_route(const std::string& name, const SequenceParams& params, std::size_t n_max) {
    if (n_max > second_route_limit(name))
        throw std::out_of_range(name + ": independent route stops at " + std::to_string(second_route_limit(name)));

    if (name == "p") return from_series(name, product_over_source(PartSource::all(), n_max), n_max);
    if (name == "pQ") return from_series(name, product_over_source(PartSource::odd(), n_max), n_max);
    if (name == "pB") return from_series(name, product_over_source(PartSource::binary(), n_max), n_max);
    if (name == "p4") {
        const auto s = eval_expr(parse_expr("q^4/((1-q)*(1-q^2)*(1-q^3)*(1-q^4))"), std::max<std::size_t>(n_max, 1),
                                 Ring::exact());
        return from_series(name, s, n_max);
    }

    struct Closed {
        const char* name;
        unsigned j;
        PartSource src;
    };
    const Closed closed[] = {
        {"e2p", 2, PartSource::all()},    {"e3p", 3, PartSource::all()},    {"e2Q", 2, PartSource::odd()},
        {"e3Q", 3, PartSource::odd()},    {"e2B", 2, PartSource::binary()}, {"e3B", 3, PartSource::binary()},
    };
    for (const auto& c : closed) {
        if (name != c.name) continue;
        BigSeq out{name, "none", 0, {BigInt(0)}};
        for (std::size_t n = 1; n <= n_max; ++n) out.values.push_back(ejp_theorem1(n, c.j, c.src));
        return out;
    }
    if (name == "e2p4") return four_part_newton(2, n_max);
    if (name == "e3p4") return four_part_newton(3, n_max);

    if (name == "sigma") {
        BigSeq out{name, canonical_params(name, params), 1, {}};
        for (std::size_t n = 1; n <= n_max; ++n) out.values.push_back(sigma_restricted(n, params.j, params.src));
        return out;
    }
    if (name == "b12") {
        auto v = b12_recurrence_table(n_max);
        return BigSeq{name, "none", 0, std::move(v)};
    }
    if (name == "b22") {
        BigSeq out{name, "none", 0, {}};
        for (std::size_t n = 0; n <= n_max; ++n) out.values.push_back(b22(n));
        return out;
    }
    throw std::invalid_argument("no independent route for '" + name + "'");
}

}  // namespace esymlab::app
