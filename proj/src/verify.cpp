#include "carter/verify.hpp"

#include <algorithm>
#include <functional>

#include "carter/abacus.hpp"
#include "carter/adic.hpp"
#include "carter/carter.hpp"
#include "carter/classifier.hpp"
#include "carter/parallel.hpp"

namespace carter {

bool injective_recursive(const Partition& lambda, const ModularParams& params)
{
    if (lambda.is_zero())
        return true;
    const auto d = l_adic_split(lambda, params.l());
    if (l_core(d.restricted, params.l()).weight != 0)
        return false;
    if (d.quotient.length() > steinberg_index(d.restricted, params.l()) + 1)
        return false;
    // In characteristic zero the Frobenius twist side is semisimple.
    if (params.p() == 0)
        return true;
    return injective_recursive(d.quotient, ModularParams(params.p(), params.p()));
}

std::vector<ModularParams> default_grid()
{
    return {{2, 0}, {3, 0}, {4, 0}, {2, 2}, {3, 3}, {5, 5}, {3, 2}, {5, 2}, {4, 3}, {3, 5}, {5, 3}};
}

namespace {

std::vector<Partition> partitions_up_to(std::int64_t max_degree)
{
    std::vector<Partition> out;
    for (std::int64_t r = 0; r <= max_degree; ++r)
        for (auto& lambda : enumerate_partitions(r))
            out.push_back(std::move(lambda));
    return out;
}

// Injective for the q = 1 group in characteristic p (every partition when p = 0).
bool frobenius_side_injective(const Partition& mu, const ModularParams& params)
{
    return params.p() == 0 || is_injective(mu, ModularParams(params.p(), params.p())).injective;
}

void fail(PropertyResult& r, const std::string& what)
{
    if (r.violations++ == 0)
        r.first_counterexample = what;
}

}  // namespace

EquivalenceReport check_equivalence(std::int64_t max_degree, const std::vector<ModularParams>& grid,
                                    unsigned threads)
{
    const auto shapes = partitions_up_to(max_degree);
    const std::size_t total = shapes.size() * grid.size();
    std::vector<EquivalenceMismatch> found(total, {{}, {2, 0}, false, false, false});
    std::vector<char> bad(total, 0);
    parallel_for(total, threads, [&](std::size_t k) {
        const auto& lambda = shapes[k % shapes.size()];
        const auto& params = grid[k / shapes.size()];
        const bool closed = is_injective(lambda, params).injective;
        const bool rec = injective_recursive(lambda, params);
        const bool via = is_injective_via_carter(lambda, params);
        if (closed != rec || closed != via) {
            bad[k] = 1;
            found[k] = {lambda, params, closed, rec, via};
        }
    });
    EquivalenceReport report{max_degree, static_cast<std::int64_t>(total), {}};
    for (std::size_t k = 0; k < total; ++k)
        if (bad[k])
            report.mismatches.push_back(found[k]);
    return report;
}

PropertyResult check_closure_under_column_removal(std::int64_t max_degree)
{
    PropertyResult r{"closure: injective minus first column stays injective", 0, 0, {}};
    const auto shapes = partitions_up_to(max_degree);
    for (const auto& params : default_grid()) {
        for (const auto& lambda : shapes) {
            if (lambda.is_zero() || !is_injective(lambda, params).injective)
                continue;
            ++r.checked;
            const auto mu = remove_first_column(lambda);
            if (!is_injective(mu, params).injective)
                fail(r, to_string(lambda) + " at " + to_string(params) + ": " + to_string(mu) + " not injective");
        }
    }
    return r;
}

PropertyResult check_steinberg_family(std::int64_t max_n, std::int64_t max_mu_degree)
{
    PropertyResult r{"family: sigma_{n-1} + a*omega_n + l*mu injective", 0, 0, {}};
    const std::vector<ModularParams> grid{{2, 0}, {2, 2}, {3, 0}, {3, 3}, {3, 2}};
    for (const auto& params : grid) {
        const auto l = params.l();
        for (std::int64_t n = 1; n <= max_n; ++n) {
            const auto base = steinberg_partition(n - 1, l);
            for (std::int64_t a = 0; a < l; ++a) {
                const auto head = add_scaled(base, omega(n), a);
                for (std::int64_t deg = 0; deg <= max_mu_degree; ++deg) {
                    for (const auto& mu : enumerate_partitions(deg, n)) {
                        if (!frobenius_side_injective(mu, params))
                            continue;
                        ++r.checked;
                        const auto lambda = add_scaled(head, mu, l);
                        if (!is_injective(lambda, params).injective)
                            fail(r, to_string(lambda) + " at " + to_string(params));
                    }
                }
            }
        }
    }
    return r;
}

PropertyResult check_core_with_last_part_l_minus_1(std::int64_t max_n)
{
    PropertyResult r{"uniqueness: l-core of length n ending in l-1 is sigma_n", 0, 0, {}};
    for (std::int64_t l = 2; l <= 5; ++l) {
        for (std::int64_t n = 1; n <= max_n; ++n) {
            const auto sigma = steinberg_partition(n, l);
            bool saw_sigma = false;
            for (std::int64_t deg = n * (l - 1); deg <= sigma.degree() + 2 * l; ++deg) {
                PartitionStream stream(deg, n);
                while (auto lambda = stream.next()) {
                    if (lambda->length() != n || (*lambda)[n] != l - 1 || !is_l_core(*lambda, l))
                        continue;
                    ++r.checked;
                    if (*lambda == sigma)
                        saw_sigma = true;
                    else
                        fail(r, to_string(*lambda) + " for l=" + std::to_string(l));
                }
            }
            if (!saw_sigma)
                fail(r, "sigma_" + std::to_string(n) + " not found as an l-core for l=" + std::to_string(l));
        }
    }
    return r;
}

PropertyResult check_steinberg_index_consistency(std::int64_t max_n)
{
    PropertyResult r{"stind(sigma_n) = n", 0, 0, {}};
    for (std::int64_t l = 2; l <= 5; ++l) {
        for (std::int64_t n = 0; n <= max_n; ++n) {
            ++r.checked;
            if (steinberg_index(steinberg_partition(n, l), l) != n)
                fail(r, "n=" + std::to_string(n) + " l=" + std::to_string(l));
        }
    }
    return r;
}

PropertyResult check_core_characterizations(std::int64_t max_degree)
{
    PropertyResult r{"core: hook test agrees with rim-hook removal", 0, 0, {}};
    for (const auto& lambda : partitions_up_to(max_degree)) {
        for (std::int64_t l : {2, 3, 4, 5, 7}) {
            ++r.checked;
            const auto res = l_core(lambda, l);
            const bool fixed = res.weight == 0;
            const bool bookkeeping = lambda.degree() == res.core.degree() + l * res.weight;
            const auto again = l_core(res.core, l);
            if (is_l_core(lambda, l) != fixed || !bookkeeping || again.weight != 0 || again.core != res.core
                || !is_l_core(res.core, l))
                fail(r, to_string(lambda) + " l=" + std::to_string(l));
        }
    }
    return r;
}

PropertyResult check_core_confluence(std::int64_t max_degree)
{
    PropertyResult r{"core: removal order does not matter", 0, 0, {}};
    for (const auto& lambda : partitions_up_to(max_degree)) {
        for (std::int64_t l : {2, 3, 4, 5, 7}) {
            ++r.checked;
            const auto a = l_core(lambda, l, RemovalOrder::LargestBeadFirst);
            const auto b = l_core(lambda, l, RemovalOrder::SmallestBeadFirst);
            if (a.core != b.core || a.weight != b.weight)
                fail(r, to_string(lambda) + " l=" + std::to_string(l));
        }
    }
    return r;
}

PropertyResult check_adic_reconstruction(std::int64_t max_degree)
{
    PropertyResult r{"adic: split and expansion reconstruct the input", 0, 0, {}};
    for (const auto& lambda : partitions_up_to(max_degree)) {
        for (std::int64_t m : {2, 3, 4, 5}) {
            ++r.checked;
            const auto d = l_adic_split(lambda, m);
            const auto e = p_adic_expansion(lambda, m);
            bool ok = recompose(d) == lambda && recompose(e) == lambda && is_l_restricted(d.restricted, m)
                      && lambda.degree() == d.restricted.degree() + m * d.quotient.degree();
            for (const auto& layer : e.layers)
                ok = ok && is_l_restricted(layer, m);
            if (!e.layers.empty())
                ok = ok && !e.layers.back().is_zero();
            if (!ok)
                fail(r, to_string(lambda) + " modulus " + std::to_string(m));
        }
    }
    return r;
}

PropertyResult check_adic_uniqueness(std::int64_t max_degree)
{
    PropertyResult r{"adic: standard form is the unique restricted split", 0, 0, {}};
    for (const auto& lambda : partitions_up_to(max_degree)) {
        for (std::int64_t l : {2, 3, 4}) {
            ++r.checked;
            std::vector<AdicDecomposition> found;
            for (std::int64_t k = 0; k * l <= lambda.degree(); ++k) {
                for (const auto& nu : enumerate_partitions(k)) {
                    std::vector<std::int64_t> rest;
                    bool nonneg = true;
                    for (std::int64_t i = 1; i <= std::max(lambda.length(), nu.length()); ++i) {
                        rest.push_back(lambda[i] - l * nu[i]);
                        nonneg = nonneg && rest.back() >= 0;
                    }
                    if (!nonneg || !std::is_sorted(rest.begin(), rest.end(), std::greater<>()))
                        continue;
                    Partition mu(rest);
                    if (is_l_restricted(mu, l))
                        found.push_back({l, mu, nu});
                }
            }
            const auto d = l_adic_split(lambda, l);
            if (found.size() != 1 || found[0].restricted != d.restricted || found[0].quotient != d.quotient)
                fail(r, to_string(lambda) + " l=" + std::to_string(l) + ": " + std::to_string(found.size())
                            + " restricted splits");
        }
    }
    return r;
}

PropertyResult check_split_inheritance(std::int64_t max_degree)
{
    PropertyResult r{"inheritance: injective implies restricted and quotient parts injective", 0, 0, {}};
    const auto shapes = partitions_up_to(max_degree);
    for (const auto& params : default_grid()) {
        for (const auto& lambda : shapes) {
            if (!is_injective(lambda, params).injective)
                continue;
            ++r.checked;
            const auto d = l_adic_split(lambda, params.l());
            if (!is_injective(d.restricted, params).injective || !frobenius_side_injective(d.quotient, params))
                fail(r, to_string(lambda) + " at " + to_string(params));
        }
    }
    return r;
}

std::vector<PropertyResult> run_properties(std::int64_t max_degree, unsigned threads)
{
    const std::vector<std::function<PropertyResult()>> jobs{
        [&] { return check_closure_under_column_removal(std::min<std::int64_t>(max_degree, 14)); },
        [&] { return check_steinberg_family(4, 8); },
        [&] { return check_core_with_last_part_l_minus_1(5); },
        [&] { return check_steinberg_index_consistency(8); },
        [&] { return check_core_characterizations(std::min<std::int64_t>(max_degree, 20)); },
        [&] { return check_core_confluence(std::min<std::int64_t>(max_degree, 20)); },
        [&] { return check_adic_reconstruction(std::min<std::int64_t>(max_degree, 20)); },
        [&] { return check_adic_uniqueness(std::min<std::int64_t>(max_degree, 12)); },
        [&] { return check_split_inheritance(std::min<std::int64_t>(max_degree, 14)); },
    };
    std::vector<PropertyResult> out(jobs.size());
    parallel_for(jobs.size(), threads, [&](std::size_t i) { out[i] = jobs[i](); });
    return out;
}

}  // namespace carter
