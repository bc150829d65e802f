#include "schurlab/identity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "schurlab/bialternant.hpp"
#include "schurlab/determinant.hpp"
#include "schurlab/homogeneous.hpp"
#include "schurlab/json_io.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/symplectic_orthogonal.hpp"

namespace schurlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::schur: return "schur";
        case Family::sp: return "sp";
        case Family::o: return "o";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

std::vector<std::size_t> iota_vec(std::size_t n, std::size_t start = 0) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = start + i;
    return v;
}

LaurentPoly embed_x(const LaurentPoly& p, std::size_t N, std::size_t K) {
    return p.embed(N + K, iota_vec(N));
}

LaurentPoly embed_y(const LaurentPoly& p, std::size_t N, std::size_t K) {
    return p.embed(N + K, iota_vec(K, N));
}

template <typename Body>
CheckReport timed_check(std::string id, nlohmann::json params, Body&& body) {
    const auto t0 = Clock::now();
    auto [passed, lhs, rhs] = body();
    const auto t1 = Clock::now();
    CheckReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.passed = passed;
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

CheckReport poly_comparison(std::string id, nlohmann::json params, const LaurentPoly& lhs,
                            const LaurentPoly& rhs, double ms, bool expect_equal = true) {
    CheckReport r;
    r.identity_id = std::move(id);
    r.parameters = std::move(params);
    r.passed = expect_equal ? (lhs == rhs) : !(lhs == rhs);
    r.lhs = RationalFn::from_poly(lhs);
    r.rhs = RationalFn::from_poly(rhs);
    r.elapsed_ms = ms;
    return r;
}

/// prod_{j=1..K} sum_{n>=0} h_n(x alphabet) y_j^n, truncated at total
/// y-degree cap (at total joint degree when joint is set, in which case
/// each summand has degree 2n).
LaurentPoly pairing_series(std::size_t N, std::size_t K, long long cap, bool doubled, bool joint) {
    const std::size_t arity = N + K;
    const auto graded = joint ? iota_vec(arity) : iota_vec(K, N);
    LaurentPoly result = LaurentPoly::one(arity);
    if (cap < 0) return LaurentPoly::zero(arity);
    const long long n_max = joint ? cap / 2 : cap;
    for (std::size_t j = 0; j < K; ++j) {
        LaurentPoly factor(arity);
        for (long long n = 0; n <= n_max; ++n) {
            const LaurentPoly h = doubled ? h_sympl(n, N) : h_plain(n, N);
            factor += embed_x(h, N, K) *
                      LaurentPoly::variable(arity, N + j, static_cast<int>(n));
        }
        result = (result * factor).truncate_keep_negative(graded, cap);
    }
    return result;
}

/// prod (1 - y_k y_l), strict index pairs for the symplectic correction,
/// non-strict for the orthogonal one.
LaurentPoly cauchy_correction(Family fam, std::size_t N, std::size_t K) {
    const std::size_t arity = N + K;
    LaurentPoly result = LaurentPoly::one(arity);
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t l = (fam == Family::sp ? k + 1 : k); l < K; ++l) {
            result *= LaurentPoly::one(arity) -
                      LaurentPoly::variable(arity, N + k) * LaurentPoly::variable(arity, N + l);
        }
    }
    return result;
}

LaurentPoly straight_value(Family fam, const GeneralizedPartition& la, std::size_t N) {
    switch (fam) {
        case Family::schur: return schur_jt(la, N);
        case Family::sp: return sp_jt(la, N);
        case Family::o: return o_jt(la, N);
    }
    return LaurentPoly(N);
}

LaurentPoly skew_value(Family fam, const GeneralizedPartition& la, const GeneralizedPartition& mu,
                       std::size_t N) {
    if (fam == Family::sp) return skew_sp_jt(la, mu, N);
    if (fam == Family::o) return skew_o_jt(la, mu, N);
    throw std::invalid_argument("skew_value: schur is handled by its own route");
}

LaurentPoly y_vandermonde(std::size_t N, std::size_t K) {
    PolyMatrix v(K, std::vector<LaurentPoly>(K, LaurentPoly::zero(K)));
    for (std::size_t i = 1; i <= K; ++i)
        for (std::size_t j = 1; j <= K; ++j)
            v[i - 1][j - 1] = LaurentPoly::variable(K, i - 1, static_cast<int>(K - j));
    return embed_y(det(v), N, K);
}

nlohmann::json partition_params(const GeneralizedPartition& la) { return nlohmann::json(la.parts()); }

} // namespace

CheckReport check_branching_sp(const GeneralizedPartition& la, std::size_t n, std::size_t k) {
    if (la.length() != n)
        throw std::invalid_argument("check_branching_sp: length(la) must equal n");
    if (k < 1 || k >= n) throw std::invalid_argument("check_branching_sp: need 1 <= k < n");
    return timed_check(
        "branching/sp",
        {{"lambda", partition_params(la)}, {"n", n}, {"k", k}},
        [&] {
            const LaurentPoly lhs = sp_jt(la, n);
            LaurentPoly rhs(n);
            for (const auto& mu : contained_partitions(la, n - k))
                rhs += sp_jt(mu, n - k).embed(n, iota_vec(n - k)) *
                       skew_sp_jt(la, mu, k).embed(n, iota_vec(k, n - k));
            return std::make_tuple(lhs == rhs, RationalFn::from_poly(lhs),
                                   RationalFn::from_poly(rhs));
        });
}

CheckReport check_branching_o(const GeneralizedPartition& la, std::size_t n, std::size_t k) {
    if (la.length() != n)
        throw std::invalid_argument("check_branching_o: length(la) must equal n");
    if (k < 1 || k >= n) throw std::invalid_argument("check_branching_o: need 1 <= k < n");
    return timed_check(
        "branching/o",
        {{"lambda", partition_params(la)}, {"n", n}, {"k", k}},
        [&] {
            const LaurentPoly lhs = o_jt(la, n);
            LaurentPoly rhs(n);
            for (const auto& mu : contained_partitions(la, n - k))
                rhs += o_jt(mu, n - k).embed(n, iota_vec(n - k)) *
                       skew_o_jt(la, mu, k).embed(n, iota_vec(k, n - k));
            return std::make_tuple(lhs == rhs, RationalFn::from_poly(lhs),
                                   RationalFn::from_poly(rhs));
        });
}

CheckReport check_cauchy(Family family, std::size_t N, long long D) {
    return timed_check(
        "cauchy/" + family_name(family), {{"N", N}, {"D", D}},
        [&] {
            const std::size_t K = N;
            LaurentPoly lhs(N + K);
            for (const auto& la : partitions_up_to(N, D))
                lhs += embed_x(straight_value(family, la, N), N, K) *
                       embed_y(schur_jt(la, K), N, K);
            LaurentPoly rhs = pairing_series(N, K, D, family != Family::schur, false);
            if (family != Family::schur) {
                rhs = (rhs * cauchy_correction(family, N, K)).truncate(iota_vec(K, N), D);
            }
            return std::make_tuple(lhs == rhs, RationalFn::from_poly(lhs),
                                   RationalFn::from_poly(rhs));
        });
}

CheckReport check_skew_cauchy_schur(const GeneralizedPartition& la_in,
                                    const GeneralizedPartition& mu_in, std::size_t N,
                                    std::size_t K, long long D) {
    return timed_check(
        "skew-cauchy/schur",
        {{"lambda", partition_params(la_in)}, {"mu", partition_params(mu_in)}, {"N", N}, {"K", K},
         {"D", D}},
        [&] {
            const GeneralizedPartition la = la_in.normalized();
            const GeneralizedPartition mu = mu_in.normalized();
            const std::size_t arity = N + K;
            const auto all = iota_vec(arity);

            LaurentPoly lhs(arity);
            const std::size_t max_len = std::min(la.length() + N, mu.length() + K);
            for (const auto& rho : partitions_up_to(max_len, la.weight() + mu.weight() + D)) {
                const LaurentPoly a = skew_schur_jt(rho, la, N);
                if (a.is_zero()) continue;
                const LaurentPoly b = skew_schur_jt(rho, mu, K);
                if (b.is_zero()) continue;
                lhs += embed_x(a, N, K) * embed_y(b, N, K);
            }
            lhs = lhs.truncate(all, D);

            LaurentPoly tau_sum(arity);
            for (const auto& tau :
                 partitions_up_to(std::min(la.length(), mu.length()),
                                  std::min(la.weight(), mu.weight()))) {
                if (!contains(tau, la) || !contains(tau, mu)) continue;
                tau_sum += embed_x(skew_schur_jt(mu, tau, N), N, K) *
                           embed_y(skew_schur_jt(la, tau, K), N, K);
            }
            const LaurentPoly series = pairing_series(N, K, D, false, true);
            const LaurentPoly rhs = (series * tau_sum).truncate(all, D);
            return std::make_tuple(lhs == rhs, RationalFn::from_poly(lhs),
                                   RationalFn::from_poly(rhs));
        });
}

CheckReport check_skew_cauchy_bcd(Family family, const GeneralizedPartition& la,
                                  const GeneralizedPartition& mu, std::size_t N, std::size_t K,
                                  long long D) {
    if (family == Family::schur)
        throw std::invalid_argument("check_skew_cauchy_bcd: use check_skew_cauchy_schur");
    if (la.length() != mu.length() + N)
        throw UnsupportedConfiguration(
            "check_skew_cauchy_bcd: need length(la) == length(mu) + N so that the skew and "
            "pairing invocations share one length bookkeeping");
    if (family == Family::o && !(la.weight() == 0 && mu.weight() == 0 && mu.length() >= K))
        throw UnsupportedConfiguration(
            "check_skew_cauchy_bcd: the orthogonal pairing identity is verified only on "
            "all-zero shapes with length(mu) >= K; other configurations do not close under "
            "the pairing lemma");
    return timed_check(
        "skew-cauchy/" + family_name(family),
        {{"lambda", partition_params(la)}, {"mu", partition_params(mu)}, {"N", N}, {"K", K},
         {"D", D}},
        [&] {
            const std::size_t l = mu.length();
            const std::size_t arity = N + K;
            const auto y_vars = iota_vec(K, N);
            const long long target = D + static_cast<long long>(K) * (K - 1) / 2;

            // Cleared comparison: both sides carry the same y-Vandermonde
            // factor, so the pairing determinants are used un-divided. The
            // equal-length pairing invocations read the top zero-padded by
            // K, which is the padding that makes them satisfy the length
            // rule of the pairing lemma.
            LaurentPoly lhs(arity);
            for (const auto& rho : padded_partitions(l + N, la.weight() + D)) {
                if (!contains(mu, rho)) continue;
                const LaurentPoly a = skew_value(family, rho, mu, N);
                if (a.is_zero()) continue;
                const LaurentPoly b = sstar_det(rho.padded(l + N + K), la, K);
                if (b.is_zero()) continue;
                lhs += embed_x(a, N, K) * embed_y(b, N, K);
            }
            lhs = lhs.truncate_keep_negative(y_vars, target);

            LaurentPoly tau_sum(arity);
            for (const auto& tau : contained_partitions(la, l)) {
                const LaurentPoly a = skew_value(family, la, tau, N);
                if (a.is_zero()) continue;
                tau_sum += embed_x(a, N, K) * embed_y(sstar_det(mu.padded(l + K), tau, K), N, K);
            }
            LaurentPoly rhs(arity);
            if (!tau_sum.is_zero()) {
                const long long cap = std::max<long long>(0, target - tau_sum.min_degree_on(y_vars));
                const LaurentPoly series = pairing_series(N, K, cap, true, false);
                rhs = (series * tau_sum).truncate_keep_negative(y_vars, target);
            }
            return std::make_tuple(lhs == rhs, RationalFn::from_poly(lhs),
                                   RationalFn::from_poly(rhs));
        });
}

std::size_t verification_threads() {
    if (const char* env = std::getenv("SCHURLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<std::size_t>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw >= 1 ? hw : 1;
}

std::vector<CheckReport> run_jobs(const std::vector<std::function<CheckReport()>>& jobs) {
    std::vector<CheckReport> results(jobs.size());
    const std::size_t workers = std::min(verification_threads(), jobs.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mx;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                try {
                    results[i] = jobs[i]();
                } catch (...) {
                    std::lock_guard lock(failure_mx);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return results;
}

namespace {

using Job = std::function<CheckReport()>;

CheckReport equivalence_report(std::string id, nlohmann::json params, const LaurentPoly& a,
                               const LaurentPoly& b, const Clock::time_point& t0) {
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return poly_comparison(std::move(id), std::move(params), a, b, ms);
}

void equivalence_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
    // Type A: determinant route vs chain route vs alternant ratio.
    for (std::size_t N = 1; N <= bounds.max_nvars; ++N) {
        for (const auto& la : partitions_up_to(bounds.max_weight, bounds.max_weight)) {
            jobs.push_back([la, N] {
                const auto t0 = Clock::now();
                return equivalence_report("equivalence/schur-jt-gt",
                                          {{"lambda", la.parts()}, {"N", N}},
                                          schur_jt(la, N),
                                          skew_schur_gt(la, GeneralizedPartition(), N), t0);
            });
            if (la.length() <= N) {
                jobs.push_back([la, N] {
                    const auto t0 = Clock::now();
                    return equivalence_report("equivalence/schur-jt-bialternant",
                                              {{"lambda", la.parts()}, {"N", N}}, schur_jt(la, N),
                                              schur_bialt(la, N), t0);
                });
            }
        }
    }
    // Straight symplectic / orthogonal vs the alternant ratios.
    for (std::size_t N = 1; N <= bounds.max_nvars; ++N) {
        for (const auto& la : partitions_up_to(N, bounds.max_weight)) {
            jobs.push_back([la, N] {
                const auto t0 = Clock::now();
                return equivalence_report("equivalence/sp-jt-bialternant",
                                          {{"lambda", la.parts()}, {"N", N}}, sp_jt(la, N),
                                          sp_bialt(la, N), t0);
            });
            if (N >= 2) {
                jobs.push_back([la, N] {
                    const auto t0 = Clock::now();
                    return equivalence_report("equivalence/o-jt-bialternant",
                                              {{"lambda", la.parts()}, {"N", N}}, o_jt(la, N),
                                              o_bialt(la, N), t0);
                });
            }
        }
    }
    // Skew symplectic / orthogonal: determinant route vs chain route.
    for (std::size_t N = 1; N <= std::min<std::size_t>(bounds.max_nvars, 2); ++N) {
        for (std::size_t l = 0; l <= 2; ++l) {
            for (const auto& mu : padded_partitions(l, bounds.max_weight)) {
                for (const auto& la : padded_partitions(l + N, bounds.max_weight)) {
                    jobs.push_back([la, mu, N] {
                        const auto t0 = Clock::now();
                        return equivalence_report(
                            "equivalence/sp-skew-jt-gt",
                            {{"lambda", la.parts()}, {"mu", mu.parts()}, {"N", N}},
                            skew_sp_jt(la, mu, N), skew_sp_gt(la, mu, N), t0);
                    });
                    jobs.push_back([la, mu, N] {
                        const auto t0 = Clock::now();
                        return equivalence_report(
                            "equivalence/o-skew-jt-gt",
                            {{"lambda", la.parts()}, {"mu", mu.parts()}, {"N", N}},
                            skew_o_jt(la, mu, N), skew_o_gt(la, mu, N), t0);
                    });
                }
            }
        }
    }
}

void branching_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
    for (std::size_t n = 2; n <= 3; ++n) {
        for (std::size_t k = 1; k < n; ++k) {
            for (const auto& la : padded_partitions(n, bounds.max_weight)) {
                jobs.push_back([la, n, k] { return check_branching_sp(la, n, k); });
                jobs.push_back([la, n, k] { return check_branching_o(la, n, k); });
            }
        }
    }
}

void cauchy_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
    for (std::size_t N = 1; N <= std::min<std::size_t>(bounds.max_nvars, 2); ++N) {
        for (Family fam : {Family::schur, Family::sp, Family::o}) {
            jobs.push_back([fam, N, D = bounds.degree] { return check_cauchy(fam, N, D); });
        }
    }
    const std::vector<GeneralizedPartition> shapes = {
        GeneralizedPartition(), GeneralizedPartition({1}), GeneralizedPartition({2}),
        GeneralizedPartition({1, 1})};
    for (const auto& la : shapes) {
        for (const auto& mu : shapes) {
            jobs.push_back(
                [la, mu, D = bounds.degree] { return check_skew_cauchy_schur(la, mu, 1, 1, D); });
        }
    }
    // symplectic pairings across small length-consistent shapes
    const std::vector<std::pair<GeneralizedPartition, GeneralizedPartition>> sp_configs = {
        {GeneralizedPartition({0}), GeneralizedPartition()},
        {GeneralizedPartition({1}), GeneralizedPartition()},
        {GeneralizedPartition({2}), GeneralizedPartition()},
        {GeneralizedPartition({0, 0}), GeneralizedPartition({0})},
        {GeneralizedPartition({1, 0}), GeneralizedPartition({0})},
        {GeneralizedPartition({1, 1}), GeneralizedPartition({1})},
        {GeneralizedPartition({2, 1}), GeneralizedPartition({1})},
    };
    for (const auto& [la, mu] : sp_configs)
        jobs.push_back([la = la, mu = mu, D = bounds.degree] {
            return check_skew_cauchy_bcd(Family::sp, la, mu, 1, 1, D);
        });
    // the orthogonal pairing closes only on the all-zero shapes
    jobs.push_back([D = bounds.degree] {
        return check_skew_cauchy_bcd(Family::o, GeneralizedPartition({0, 0}),
                                     GeneralizedPartition({0}), 1, 1, D);
    });
}

void specialization_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
    const std::size_t max_base = static_cast<std::size_t>(std::max<long long>(bounds.max_weight, 1));
    for (std::size_t l = 0; l <= max_base; ++l) {
        for (const auto& nu : padded_partitions(l, bounds.max_weight)) {
            for (const auto& la : padded_partitions(l + 1, bounds.max_weight)) {
                jobs.push_back([la, nu] {
                    const auto t0 = Clock::now();
                    return equivalence_report("specialization/sp",
                                              {{"lambda", la.parts()}, {"nu", nu.parts()}},
                                              skew_sp_jt(la, nu, 1), sp_single_var(la, nu), t0);
                });
                jobs.push_back([la, nu] {
                    const auto t0 = Clock::now();
                    return equivalence_report("specialization/o",
                                              {{"lambda", la.parts()}, {"nu", nu.parts()}},
                                              skew_o_jt(la, nu, 1), o_single_var(la, nu), t0);
                });
            }
        }
    }
}

CheckReport remark_padding_sensitivity() {
    const auto t0 = Clock::now();
    const LaurentPoly a = skew_sp_jt(GeneralizedPartition({2, 1, 1}), GeneralizedPartition({1}), 2);
    const LaurentPoly b =
        skew_sp_jt(GeneralizedPartition({2, 1, 1, 0}), GeneralizedPartition({1, 0}), 2);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return poly_comparison("remark/padding-sensitivity",
                           {{"lambda", {2, 1, 1}}, {"mu", {1}}, {"N", 2}}, a, b, ms,
                           /*expect_equal=*/false);
}

CheckReport remark_schur_reduction(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                                   std::size_t N) {
    const auto t0 = Clock::now();
    const LaurentPoly a = skew_sp_jt(la, mu, N);
    const LaurentPoly b = skew_schur_jt(la, mu, Alphabet::doubled_of(N));
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return poly_comparison("remark/schur-reduction",
                           {{"lambda", la.parts()}, {"mu", mu.parts()}, {"N", N}}, a, b, ms);
}

CheckReport remark_sstar_is_schur(const GeneralizedPartition& la, std::size_t N) {
    const auto t0 = Clock::now();
    const RationalFn v = sstar(la, GeneralizedPartition(), N);
    const RationalFn s = RationalFn::from_poly(schur_jt(la, N));
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    CheckReport r;
    r.identity_id = "remark/sstar-is-schur";
    r.parameters = {{"lambda", la.parts()}, {"N", N}};
    r.passed = v == s;
    r.lhs = v;
    r.rhs = s;
    r.elapsed_ms = ms;
    return r;
}

CheckReport remark_sstar_vanishing(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                                   std::size_t N) {
    const auto t0 = Clock::now();
    const RationalFn v = sstar(la, mu, N);
    const RationalFn zero = RationalFn::from_poly(LaurentPoly::zero(N));
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    CheckReport r;
    r.identity_id = "remark/sstar-vanishing";
    r.parameters = {{"lambda", la.parts()}, {"mu", mu.parts()}, {"N", N}};
    r.passed = v == zero;
    r.lhs = v;
    r.rhs = zero;
    r.elapsed_ms = ms;
    return r;
}

CheckReport remark_sstar_stability(const GeneralizedPartition& la, const GeneralizedPartition& mu,
                                   std::size_t N) {
    const auto t0 = Clock::now();
    const RationalFn padded = sstar(la.padded(la.length() + 1), mu.padded(mu.length() + 1), N);
    const RationalFn plainv = sstar(la, mu, N);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    CheckReport r;
    r.identity_id = "remark/sstar-stability";
    r.parameters = {{"lambda", la.parts()}, {"mu", mu.parts()}, {"N", N}};
    r.passed = padded == plainv;
    r.lhs = padded;
    r.rhs = plainv;
    r.elapsed_ms = ms;
    return r;
}

CheckReport remark_cauchy_reduction(std::size_t N, long long D) {
    const auto t0 = Clock::now();
    // bottom all-zero of length N, top all-zero of length 2N
    const GeneralizedPartition mu_zero = GeneralizedPartition().padded(N);
    const GeneralizedPartition la_zero = GeneralizedPartition().padded(2 * N);
    const std::size_t K = N;
    CheckReport inner = check_skew_cauchy_bcd(Family::sp, la_zero, mu_zero, N, K, D);
    // The all-zero configuration collapses to the Schur pairing over the
    // doubled alphabet: compare the cleared sum against that directly.
    const long long target = D + static_cast<long long>(K) * (K - 1) / 2;
    LaurentPoly classical(N + K);
    for (const auto& rho : partitions_up_to(N, D))
        classical += embed_x(schur_jt(rho, Alphabet::doubled_of(N)), N, K) *
                     embed_y(schur_jt(rho, K), N, K);
    const LaurentPoly expected =
        (y_vandermonde(N, K) * classical).truncate_keep_negative(iota_vec(K, N), target);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    CheckReport r;
    r.identity_id = "remark/cauchy-reduction";
    r.parameters = {{"N", N}, {"D", D}};
    r.passed = inner.passed && inner.lhs.num() == expected;
    r.lhs = inner.lhs;
    r.rhs = RationalFn::from_poly(expected);
    r.elapsed_ms = ms;
    return r;
}

void remarks_jobs(const SuiteBounds& bounds, std::vector<Job>& jobs) {
    jobs.push_back([] { return remark_padding_sensitivity(); });
    const std::vector<std::tuple<GeneralizedPartition, GeneralizedPartition, std::size_t>>
        reductions = {
            {GeneralizedPartition({3, 0}), GeneralizedPartition(), 2},
            {GeneralizedPartition({2, 1, 0}), GeneralizedPartition({1}), 2},
            {GeneralizedPartition({1, 1, 0}), GeneralizedPartition({1}), 2},
            {GeneralizedPartition({2, 0}), GeneralizedPartition({0}), 1},
            {GeneralizedPartition({2, 2, 0, 0}), GeneralizedPartition({1, 0}), 2},
        };
    for (const auto& [la, mu, N] : reductions)
        jobs.push_back([la = la, mu = mu, N = N] { return remark_schur_reduction(la, mu, N); });
    for (std::size_t N = 1; N <= std::min<std::size_t>(bounds.max_nvars, 3); ++N) {
        for (const auto& la : partitions_up_to(N, bounds.max_weight)) {
            const GeneralizedPartition padded = la.padded(N);
            jobs.push_back([padded, N] { return remark_sstar_is_schur(padded, N); });
        }
    }
    const std::vector<std::tuple<GeneralizedPartition, GeneralizedPartition, std::size_t>>
        vanishing = {
            {GeneralizedPartition({2, 1}), GeneralizedPartition({0}), 1},
            {GeneralizedPartition({1, 1}), GeneralizedPartition({0}), 1},
            {GeneralizedPartition({2, 1, 1}), GeneralizedPartition({1, 0}), 1},
            {GeneralizedPartition({3, 2, 1}), GeneralizedPartition({0}), 2},
        };
    for (const auto& [la, mu, N] : vanishing)
        jobs.push_back([la = la, mu = mu, N = N] { return remark_sstar_vanishing(la, mu, N); });
    const std::vector<std::tuple<GeneralizedPartition, GeneralizedPartition, std::size_t>>
        stability = {
            {GeneralizedPartition({2, 1}), GeneralizedPartition({1}), 1},
            {GeneralizedPartition({3}), GeneralizedPartition(), 1},
            {GeneralizedPartition({2, 1}), GeneralizedPartition(), 2},
            {GeneralizedPartition({2, 2, 1}), GeneralizedPartition({1}), 2},
        };
    for (const auto& [la, mu, N] : stability)
        jobs.push_back([la = la, mu = mu, N = N] { return remark_sstar_stability(la, mu, N); });
    jobs.push_back([D = bounds.degree] { return remark_cauchy_reduction(1, D); });
    jobs.push_back([D = std::min<long long>(bounds.degree, 2)] {
        return remark_cauchy_reduction(2, D);
    });
}

} // namespace

std::vector<CheckReport> run_suite(const std::string& suite_id, const SuiteBounds& bounds) {
    std::vector<Job> jobs;
    if (suite_id == "equivalence") {
        equivalence_jobs(bounds, jobs);
    } else if (suite_id == "branching") {
        branching_jobs(bounds, jobs);
    } else if (suite_id == "cauchy") {
        cauchy_jobs(bounds, jobs);
    } else if (suite_id == "specialization") {
        specialization_jobs(bounds, jobs);
    } else if (suite_id == "remarks") {
        remarks_jobs(bounds, jobs);
    } else {
        throw UnknownSuite("run_suite: unknown suite '" + suite_id + "'");
    }
    return run_jobs(jobs);
}

nlohmann::json to_json(const CheckReport& r) {
    return {{"identity", r.identity_id}, {"parameters", r.parameters}, {"passed", r.passed},
            {"lhs", to_json(r.lhs)},     {"rhs", to_json(r.rhs)},      {"elapsed_ms", r.elapsed_ms}};
}

} // namespace schurlab
