#include "octachain/closed_forms.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "octachain/decomposition.hpp"
#include "octachain/invariants.hpp"

namespace octachain {

namespace {

void require_n(long n) {
    if (n < 1) throw std::invalid_argument("closed forms are stated for n >= 1");
}

BigInt cubic_at(long a3, long a2, long a1, long a0, long n) {
    const BigInt x(n);
    return ((BigInt(a3) * x + a2) * x + a1) * x + a0;
}

BigInt pow2(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return r;
}

Rational tenth_power(long e) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
    return make_rational(BigInt(1), r);
}

}  // namespace

namespace formulas {

Rational kf(long n) {
    require_n(n);
    return make_rational(cubic_at(27, 51, 26, 4, n), 6);
}

Rational kfstar(long n) {
    require_n(n);
    return make_rational(cubic_at(507, 559, 204, 8, n), 6);
}

BigInt tau(long n) {
    require_n(n);
    BigInt three_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, static_cast<unsigned long>(n - 1));
    return pow2(8 * n + 2) * three_pow;
}

Rational sum_block_minor_full(long n) {
    require_n(n);
    return Rational(BigInt(3 * n + 1) * pow2(3 * n));
}

Rational sum_block_minor_drop1(long n) {
    require_n(n);
    return Rational(BigInt(n) * (3 * n + 1) * (3 * n + 2) * pow2(3 * n - 2));
}

Rational norm_sum_minor_full(long n) {
    require_n(n);
    return make_rational(BigInt(13 * n + 1), 18) * tenth_power(n - 1);
}

Rational norm_sum_minor_drop1(long n) {
    require_n(n);
    return make_rational(cubic_at(169, 39, 22, 0, n), 72) * tenth_power(n - 1);
}

Rational sum_block_recip_eigensum(long n) {
    require_n(n);
    return make_rational(BigInt(n) * (3 * n + 2), 4);
}

Rational norm_sum_recip_eigensum(long n) {
    require_n(n);
    return make_rational(cubic_at(169, 39, 22, 0, n), BigInt(4) * (13 * n + 1));
}

Rational diff_block_recip_sum(long n) {
    require_n(n);
    return make_rational(2 * n + 1, 3);
}

Rational norm_diff_recip_sum(long n) {
    require_n(n);
    return make_rational(17 * n + 4, 6);
}

BigInt wiener_claimed(long n) {
    require_n(n);
    return cubic_at(18, 21, 10, 1, n);
}

BigInt gutman_claimed(long n) {
    require_n(n);
    return cubic_at(338, 126, 92, 107, n);
}

BigInt wiener_type1(long n) {
    require_n(n);
    return cubic_at(0, 9, 3, 1, n);
}

BigInt wiener_type2_closed(long n) {
    require_n(n);
    return cubic_at(6, 6, 2, 0, n);  // 2n(1 + 3n + 3n^2)
}

BigInt wiener_type2_sum(long n) {
    require_n(n);
    BigInt total = 0;
    for (long s = 1; s <= n; ++s) {
        total += 2 + (3 * s - 2) * (3 * s - 1) + (3 * n + 2 - 3 * s) * (3 * n + 3 - 3 * s);
    }
    return total;
}

BigInt wiener_type3(long n) {
    require_n(n);
    return cubic_at(6, 3, 1, 0, n);  // n(1 + 3n + 6n^2)
}

BigInt wiener_type4(long n) {
    require_n(n);
    return cubic_at(6, -6, 1, -1, n);
}

BigInt gutman_type1(long n) {
    require_n(n);
    return cubic_at(0, 117, 9, 9, n);  // 9(1 + n + 13n^2)
}

BigInt gutman_type2(long n) {
    require_n(n);
    return cubic_at(104, 60, 36, 32, n);  // 4(8 + 9n + 15n^2 + 26n^3)
}

BigInt gutman_type3(long n) {
    require_n(n);
    return cubic_at(104, 12, -12, 32, n);  // 4(8 - 3n + 3n^2 + 26n^3)
}

BigInt gutman_type4(long n) {
    require_n(n);
    return cubic_at(130, -180, 50, 25, n);  // 5(5 + 10n - 36n^2 + 26n^3)
}

}  // namespace formulas

namespace {

using Evaluator = std::function<Rational(long)>;

const std::vector<std::pair<std::string, Evaluator>>& catalog() {
    static const std::vector<std::pair<std::string, Evaluator>> entries = {
        {"kf", formulas::kf},
        {"kfstar", formulas::kfstar},
        {"tau", [](long n) { return Rational(formulas::tau(n)); }},
        {"sum_block_minor_full", formulas::sum_block_minor_full},
        {"sum_block_minor_drop1", formulas::sum_block_minor_drop1},
        {"norm_sum_minor_full", formulas::norm_sum_minor_full},
        {"norm_sum_minor_drop1", formulas::norm_sum_minor_drop1},
        {"sum_block_recip_eigensum", formulas::sum_block_recip_eigensum},
        {"norm_sum_recip_eigensum", formulas::norm_sum_recip_eigensum},
        {"diff_block_recip_sum", formulas::diff_block_recip_sum},
        {"norm_diff_recip_sum", formulas::norm_diff_recip_sum},
        {"wiener_claimed", [](long n) { return Rational(formulas::wiener_claimed(n)); }},
        {"gutman_claimed", [](long n) { return Rational(formulas::gutman_claimed(n)); }},
        {"wiener_type1", [](long n) { return Rational(formulas::wiener_type1(n)); }},
        {"wiener_type2_closed", [](long n) { return Rational(formulas::wiener_type2_closed(n)); }},
        {"wiener_type2_sum", [](long n) { return Rational(formulas::wiener_type2_sum(n)); }},
        {"wiener_type3", [](long n) { return Rational(formulas::wiener_type3(n)); }},
        {"wiener_type4", [](long n) { return Rational(formulas::wiener_type4(n)); }},
        {"gutman_type1", [](long n) { return Rational(formulas::gutman_type1(n)); }},
        {"gutman_type2", [](long n) { return Rational(formulas::gutman_type2(n)); }},
        {"gutman_type3", [](long n) { return Rational(formulas::gutman_type3(n)); }},
        {"gutman_type4", [](long n) { return Rational(formulas::gutman_type4(n)); }},
    };
    return entries;
}

}  // namespace

Rational evaluate_formula(const std::string& name, long n) {
    for (const auto& [key, fn] : catalog()) {
        if (key == name) return fn(n);
    }
    throw std::invalid_argument("unknown formula '" + name + "'");
}

const std::vector<std::string>& formula_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [key, fn] : catalog()) out.push_back(key);
        return out;
    }();
    return names;
}

std::vector<Rational> fit_cubic(const std::vector<std::pair<long, BigInt>>& points) {
    if (points.size() < 4) {
        throw std::invalid_argument("fit_cubic: need at least 4 points");
    }
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("fit_cubic: duplicate abscissa");
            }

    // Newton interpolation through the first four points.
    std::vector<Rational> xs, ys;
    for (int i = 0; i < 4; ++i) {
        xs.emplace_back(points[i].first);
        ys.emplace_back(points[i].second);
    }
    for (int level = 1; level < 4; ++level)
        for (int i = 3; i >= level; --i)
            ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
    std::vector<Rational> asc{ys[3]};
    for (int i = 2; i >= 0; --i) {
        std::vector<Rational> next(asc.size() + 1, Rational(0));
        for (size_t k = 0; k < asc.size(); ++k) {
            next[k + 1] += asc[k];
            next[k] -= xs[i] * asc[k];
        }
        next[0] += ys[i];
        asc = std::move(next);
    }
    asc.resize(4, Rational(0));
    if (asc[3] == 0) {
        throw std::invalid_argument("fit_cubic: data is not cubic (zero leading coefficient)");
    }

    std::vector<Rational> desc{asc[3], asc[2], asc[1], asc[0]};
    for (size_t i = 4; i < points.size(); ++i) {
        if (evaluate_cubic(desc, points[i].first) != Rational(points[i].second)) {
            throw std::invalid_argument("fit_cubic: point at n=" + std::to_string(points[i].first) +
                                        " does not lie on the interpolating cubic");
        }
    }
    return desc;
}

Rational evaluate_cubic(const std::vector<Rational>& coeffs, long n) {
    Rational acc = 0;
    for (const Rational& c : coeffs) acc = acc * n + c;
    return acc;
}

namespace {

std::vector<Rational> fit_corrected(long long (*value)(const ChainGraph&)) {
    std::vector<std::pair<long, BigInt>> pts;
    for (int n = 1; n <= 6; ++n) pts.emplace_back(n, to_bigint(value(ChainGraph(n))));
    return fit_cubic(pts);
}

}  // namespace

std::vector<Rational> corrected_wiener_cubic() {
    static const std::vector<Rational> c = fit_corrected(&wiener);
    return c;
}

std::vector<Rational> corrected_gutman_cubic() {
    static const std::vector<Rational> c = fit_corrected(&gutman);
    return c;
}

bool TheoremReport::clean_apart_from_known_errata() const {
    // The published Wiener/Gutman cubics and the per-type sums feeding them
    // are the only formulas allowed to disagree with computation: the
    // type-2 simplifications at every n, and the Gutman type-3/type-4
    // sums away from isolated n where they happen to coincide.
    static const std::vector<std::string> known = {
        "wiener_claimed",      "gutman_claimed", "wiener_type2_closed",
        "gutman_type2",        "gutman_type3",   "gutman_type4",
    };
    for (const auto& e : entries) {
        if (e.match) continue;
        bool allowed = false;
        for (const auto& k : known) allowed = allowed || (k == e.name);
        if (!allowed) return false;
    }
    return true;
}

TheoremReport verify_theorems(int n_max) {
    if (n_max < 1) throw std::invalid_argument("verify_theorems: n_max must be >= 1");
    TheoremReport report;
    auto add = [&](const std::string& name, long n, const Rational& formula,
                   const Rational& computed) {
        report.entries.push_back({name, n, formula == computed, rational_to_string(formula),
                                  rational_to_string(computed)});
    };

    for (long n = 1; n <= n_max; ++n) {
        const ChainGraph g(static_cast<int>(n));
        const MirrorDecomposition d = decompose(g);
        const CharPoly sum_poly = char_poly(d.sum);
        const CharPoly norm_sum_poly = char_poly(d.norm_sum);
        const int dim = g.positions();

        add("kf", n, formulas::kf(n), kirchhoff_spectral_route(g));
        add("kfstar", n, formulas::kfstar(n), mult_kirchhoff_spectral_route(g));
        add("tau", n, Rational(formulas::tau(n)), Rational(spanning_trees_product_route(g)));

        add("sum_block_minor_full", n, formulas::sum_block_minor_full(n),
            sum_poly.principal_minor_total(dim - 1));
        add("sum_block_minor_drop1", n, formulas::sum_block_minor_drop1(n),
            sum_poly.principal_minor_total(dim - 2));
        add("norm_sum_minor_full", n, formulas::norm_sum_minor_full(n),
            norm_sum_poly.principal_minor_total(dim - 1));
        add("norm_sum_minor_drop1", n, formulas::norm_sum_minor_drop1(n),
            norm_sum_poly.principal_minor_total(dim - 2));

        add("sum_block_recip_eigensum", n, formulas::sum_block_recip_eigensum(n),
            reciprocal_nonzero_eigensum(sum_poly));
        add("norm_sum_recip_eigensum", n, formulas::norm_sum_recip_eigensum(n),
            reciprocal_nonzero_eigensum(norm_sum_poly));
        add("diff_block_recip_sum", n, formulas::diff_block_recip_sum(n),
            reciprocal_eigensum_diagonal(d.diff));
        add("norm_diff_recip_sum", n, formulas::norm_diff_recip_sum(n),
            reciprocal_eigensum_diagonal(d.norm_diff));

        add("wiener_claimed", n, Rational(formulas::wiener_claimed(n)), to_rational(wiener(g)));
        add("gutman_claimed", n, Rational(formulas::gutman_claimed(n)), to_rational(gutman(g)));

        // per-type distance sums against plain BFS
        long long w2 = 0, w3 = 0, w4 = 0, f2 = 0, f3 = 0, f4 = 0;
        for (long s = 1; s <= n; ++s) {
            w2 += distance_row_sum(g, {Copy::V1, static_cast<int>(3 * s - 1)});
            w3 += distance_row_sum(g, {Copy::V1, static_cast<int>(3 * s)});
            f2 += weighted_distance_row_sum(g, {Copy::V1, static_cast<int>(3 * s - 1)});
            f3 += weighted_distance_row_sum(g, {Copy::V1, static_cast<int>(3 * s)});
        }
        for (long s = 1; s < n; ++s) {
            w4 += distance_row_sum(g, {Copy::V1, static_cast<int>(3 * s + 1)});
            f4 += weighted_distance_row_sum(g, {Copy::V1, static_cast<int>(3 * s + 1)});
        }
        add("wiener_type1", n, Rational(formulas::wiener_type1(n)),
            to_rational(distance_row_sum(g, {Copy::V1, 1})));
        add("wiener_type2_closed", n, Rational(formulas::wiener_type2_closed(n)), to_rational(w2));
        add("wiener_type2_sum", n, Rational(formulas::wiener_type2_sum(n)), to_rational(w2));
        add("wiener_type3", n, Rational(formulas::wiener_type3(n)), to_rational(w3));
        add("wiener_type4", n, Rational(formulas::wiener_type4(n)), to_rational(w4));
        add("gutman_type1", n, Rational(formulas::gutman_type1(n)),
            to_rational(weighted_distance_row_sum(g, {Copy::V1, 1})));
        add("gutman_type2", n, Rational(formulas::gutman_type2(n)), to_rational(f2));
        add("gutman_type3", n, Rational(formulas::gutman_type3(n)), to_rational(f3));
        add("gutman_type4", n, Rational(formulas::gutman_type4(n)), to_rational(f4));
    }
    return report;
}

std::vector<RatioPoint> ratio_series(int n_max, int direct_limit) {
    if (n_max < 1) throw std::invalid_argument("ratio_series: n_max must be >= 1");
    const std::vector<Rational> w_fit = corrected_wiener_cubic();
    const std::vector<Rational> g_fit = corrected_gutman_cubic();

    std::vector<RatioPoint> series;
    series.reserve(n_max);
    for (long n = 1; n <= n_max; ++n) {
        RatioPoint p;
        p.n = n;
        if (n <= direct_limit) {
            const ChainGraph g(static_cast<int>(n));
            p.kf_over_wiener = kirchhoff_spectral_route(g) / to_rational(wiener(g));
            p.kfstar_over_gutman = mult_kirchhoff_spectral_route(g) / to_rational(gutman(g));
        } else {
            p.kf_over_wiener = formulas::kf(n) / evaluate_cubic(w_fit, n);
            p.kfstar_over_gutman = formulas::kfstar(n) / evaluate_cubic(g_fit, n);
        }
        series.push_back(std::move(p));
    }
    return series;
}

}  // namespace octachain
