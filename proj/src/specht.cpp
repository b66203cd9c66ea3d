#include "carter/specht.hpp"

#include <algorithm>
#include <numeric>

#include "carter/classifier.hpp"
#include "carter/errors.hpp"
#include "carter/params.hpp"
#include "carter/parallel.hpp"

namespace carter {

namespace {

void guard_degree(const Partition& lambda, std::int64_t limit, const char* what)
{
    if (lambda.degree() > limit)
        throw Error(ErrorKind::TooLarge, std::string(what) + " limited to degree " + std::to_string(limit) + ", got "
                                             + std::to_string(lambda.degree()));
}

void fill_tableaux(const Partition& shape, Tableau& t, int next, int last, std::vector<Tableau>& out)
{
    if (next > last) {
        out.push_back(t);
        return;
    }
    for (std::size_t row = 0; row < t.size(); ++row) {
        const auto width = t[row].size();
        if (static_cast<std::int64_t>(width) == shape[static_cast<std::int64_t>(row) + 1])
            continue;
        if (row > 0 && t[row - 1].size() <= width)
            continue;
        t[row].push_back(next);
        fill_tableaux(shape, t, next + 1, last, out);
        t[row].pop_back();
    }
}

std::vector<int> reading_word(const Tableau& t)
{
    std::vector<int> w;
    for (const auto& row : t)
        w.insert(w.end(), row.begin(), row.end());
    return w;
}

int parity(const std::vector<int>& perm)
{
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            inv += perm[i] > perm[j];
    return inv & 1;
}

std::int64_t mod(std::int64_t a, std::int64_t p)
{
    a %= p;
    return a < 0 ? a + p : a;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p)
{
    // p is prime: a^(p-2)
    std::int64_t result = 1;
    std::int64_t base = mod(a, p);
    for (std::int64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return result;
}

}  // namespace

Tabloid decode_tabloid(const Partition& shape, TabloidKey key)
{
    Tabloid out{shape, std::vector<std::vector<int>>(static_cast<std::size_t>(shape.length()))};
    const auto base = static_cast<TabloidKey>(std::max<std::int64_t>(shape.length(), 1));
    for (int k = 1; k <= shape.degree(); ++k) {
        out.rows[static_cast<std::size_t>(key % base)].push_back(k);
        key /= base;
    }
    return out;
}

std::vector<Tableau> standard_tableaux(const Partition& lambda)
{
    guard_degree(lambda, kTableauDegreeLimit, "standard tableaux");
    std::vector<Tableau> out;
    Tableau t(static_cast<std::size_t>(lambda.length()));
    fill_tableaux(lambda, t, 1, static_cast<int>(lambda.degree()), out);
    std::sort(out.begin(), out.end(),
              [](const Tableau& a, const Tableau& b) { return reading_word(a) < reading_word(b); });
    return out;
}

PolytabloidVector polytabloid(const Partition& shape, const Tableau& t)
{
    guard_degree(shape, kGramDegreeLimit, "polytabloids");
    const Partition conj = transpose(shape);
    const auto ncols = static_cast<std::size_t>(conj.length());
    const auto base = static_cast<TabloidKey>(std::max<std::int64_t>(shape.length(), 1));

    std::vector<TabloidKey> weight(static_cast<std::size_t>(shape.degree()) + 1, 1);
    for (std::size_t k = 2; k < weight.size(); ++k)
        weight[k] = weight[k - 1] * base;

    // perms[b][a] = which row of column b the entry at row a moves to.
    std::vector<std::vector<int>> perms(ncols);
    for (std::size_t b = 0; b < ncols; ++b) {
        perms[b].resize(static_cast<std::size_t>(conj[static_cast<std::int64_t>(b) + 1]));
        std::iota(perms[b].begin(), perms[b].end(), 0);
    }

    PolytabloidVector v{shape, t, {}};
    for (;;) {
        TabloidKey key = 0;
        int sign = 0;
        for (std::size_t b = 0; b < ncols; ++b) {
            for (std::size_t a = 0; a < perms[b].size(); ++a) {
                const int entry = t[a][b];
                key += static_cast<TabloidKey>(perms[b][a]) * weight[static_cast<std::size_t>(entry)];
            }
            sign ^= parity(perms[b]);
        }
        v.coords.emplace_back(key, sign ? -1 : 1);

        std::size_t b = 0;
        while (b < ncols && !std::next_permutation(perms[b].begin(), perms[b].end()))
            ++b;
        if (b == ncols)
            break;
    }
    std::sort(v.coords.begin(), v.coords.end());
    return v;
}

std::int64_t pairing(const PolytabloidVector& s, const PolytabloidVector& t)
{
    std::int64_t sum = 0;
    auto i = s.coords.begin();
    auto j = t.coords.begin();
    while (i != s.coords.end() && j != t.coords.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else
            sum += static_cast<std::int64_t>(i++->second) * (j++->second);
    }
    return sum;
}

GramMatrix gram_matrix(const Partition& lambda, const std::vector<Tableau>& basis)
{
    guard_degree(lambda, kGramDegreeLimit, "Gram matrix");
    std::vector<PolytabloidVector> vecs;
    vecs.reserve(basis.size());
    for (const auto& t : basis)
        vecs.push_back(polytabloid(lambda, t));

    GramMatrix g{lambda, static_cast<std::int64_t>(basis.size()), {}};
    g.entries.assign(basis.size(), std::vector<std::int64_t>(basis.size(), 0));
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = i; j < vecs.size(); ++j)
            g.entries[i][j] = g.entries[j][i] = pairing(vecs[i], vecs[j]);
    return g;
}

GramMatrix gram_matrix(const Partition& lambda)
{
    guard_degree(lambda, kGramDegreeLimit, "Gram matrix");
    return gram_matrix(lambda, standard_tableaux(lambda));
}

std::int64_t rank_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p)
{
    auto a = m;
    for (auto& row : a)
        for (auto& x : row)
            x = mod(x, p);
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        const auto inv = inverse_mod(a[rank][c], p);
        for (auto& x : a[rank])
            x = x * inv % p;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            const auto f = a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = mod(a[r][k] - f * a[rank][k], p);
        }
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

std::int64_t rank_fraction_free_mod_p(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p)
{
    auto a = m;
    for (auto& row : a)
        for (auto& x : row)
            x = mod(x, p);
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(a[pivot], a[rank]);
        const auto piv = a[rank][c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const auto lead = a[r][c];
            if (lead == 0)
                continue;
            for (std::size_t k = c; k < cols; ++k)
                a[r][k] = mod(piv * a[r][k] - lead * a[rank][k], p);
        }
        ++rank;
    }
    return static_cast<std::int64_t>(rank);
}

BigInt determinant(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m[i][j];
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0)
                ++s;
            if (s == n)
                return 0;
            std::swap(a[s], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool specht_irreducible_mod_p(const Partition& lambda, std::int64_t p)
{
    if (p == 2)
        throw Error(ErrorKind::OddPrimeRequired, "p=2 unsupported by oracle");
    if (!is_prime(p))
        throw Error(ErrorKind::DomainError, "oracle needs an odd prime, got " + std::to_string(p));
    guard_degree(lambda, kGramDegreeLimit, "Specht oracle");
    if (!is_l_regular(lambda, p))
        throw Error(ErrorKind::NotRegular, to_string(lambda) + " is not " + std::to_string(p) + "-regular");

    const auto g = gram_matrix(lambda);
    const bool by_inverse = rank_mod_p(g.entries, p) == g.dim;
    const bool by_fraction_free = rank_fraction_free_mod_p(g.entries, p) == g.dim;
    if (by_inverse != by_fraction_free)
        throw Error(ErrorKind::CriterionDisagreement, "modular rank routes disagree on " + to_string(lambda));
    if (g.dim <= kExactDeterminantDimLimit && (determinant(g.entries) % p != 0) != by_inverse)
        throw Error(ErrorKind::CriterionDisagreement, "rank and exact determinant disagree on " + to_string(lambda));
    return by_inverse;
}

OracleReport oracle_crosscheck(std::int64_t max_degree, std::int64_t p, unsigned threads)
{
    if (p == 2)
        throw Error(ErrorKind::OddPrimeRequired, "p=2 unsupported by oracle");
    if (!is_prime(p))
        throw Error(ErrorKind::DomainError, "oracle needs an odd prime, got " + std::to_string(p));
    if (max_degree > kGramDegreeLimit)
        throw Error(ErrorKind::TooLarge, "oracle limited to degree " + std::to_string(kGramDegreeLimit));

    const ModularParams params(p, p);
    std::vector<Partition> shapes;
    for (std::int64_t r = 0; r <= max_degree; ++r)
        for (auto& lambda : enumerate_partitions(r))
            if (is_l_regular(lambda, p))
                shapes.push_back(std::move(lambda));

    OracleReport report{p, max_degree, std::vector<OracleRow>(shapes.size()), {}};
    parallel_for(shapes.size(), threads, [&](std::size_t i) {
        report.rows[i] = {shapes[i], specht_irreducible_mod_p(shapes[i], p), is_injective(shapes[i], params).injective};
    });
    for (const auto& row : report.rows)
        if (row.specht_irreducible != row.injective)
            report.mismatches.push_back(row.shape);
    return report;
}

}  // namespace carter
