#include "gbs/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "gbs/arith.hpp"

namespace gbs {

namespace {

void check_table(const FiniteGroupTable &g)
{
    std::size_t n = g.order;
    if (g.mul.size() != n * n || g.inv.size() != n)
        throw std::logic_error("group table: bad dimensions");
    for (std::size_t x = 0; x < n; ++x) {
        if (g.at(0, int(x)) != int(x) || g.at(int(x), 0) != int(x))
            throw std::logic_error("group table: identity is not neutral");
        if (g.at(int(x), g.inv[x]) != 0 || g.at(g.inv[x], int(x)) != 0)
            throw std::logic_error("group table: bad inverse");
    }
    // exhaustive associativity up to order 64, sampled above
    if (n <= 64) {
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                for (std::size_t z = 0; z < n; ++z)
                    if (g.at(g.at(int(x), int(y)), int(z)) != g.at(int(x), g.at(int(y), int(z))))
                        throw std::logic_error("group table: not associative");
    } else {
        std::size_t step = n / 17 + 1;
        for (std::size_t x = 0; x < n; x += step)
            for (std::size_t y = 0; y < n; y += step)
                for (std::size_t z = 0; z < n; z += step)
                    if (g.at(g.at(int(x), int(y)), int(z)) != g.at(int(x), g.at(int(y), int(z))))
                        throw std::logic_error("group table: not associative");
    }
}

std::set<int> closure(const FiniteGroupTable &g, const std::set<int> &gens)
{
    std::set<int> sub{0};
    std::vector<int> work(gens.begin(), gens.end());
    sub.insert(gens.begin(), gens.end());
    while (!work.empty()) {
        int x = work.back();
        work.pop_back();
        for (int y : std::set<int>(sub)) {
            for (int z : {g.at(x, y), g.at(y, x)}) {
                if (sub.insert(z).second)
                    work.push_back(z);
            }
        }
    }
    return sub;
}

int commutator(const FiniteGroupTable &g, int x, int y)
{
    return g.at(g.at(g.inv[x], g.inv[y]), g.at(x, y));
}

unsigned lcs_class(const FiniteGroupTable &g)
{
    if (g.order == 1)
        return 0;
    std::set<int> all;
    for (std::size_t i = 0; i < g.order; ++i)
        all.insert(int(i));
    std::set<int> current = all;
    unsigned cls = 0;
    while (current.size() > 1) {
        std::set<int> comms;
        for (int x : current)
            for (int y : all)
                comms.insert(commutator(g, x, y));
        std::set<int> next = closure(g, comms);
        if (next == current)
            throw std::logic_error("group table: lower central series does not terminate");
        current = next;
        ++cls;
    }
    return cls;
}

} // namespace

int FiniteGroupTable::power(int g, const Int &e) const
{
    // element orders divide the group order, so reduce the exponent first
    unsigned long r = fdiv_r(e, Int(static_cast<unsigned long>(order))).get_ui();
    int acc = 0, base = g;
    while (r) {
        if (r & 1)
            acc = at(acc, base);
        base = at(base, base);
        r >>= 1;
    }
    return acc;
}

FiniteGroupTable FiniteGroupTable::abelian(const std::vector<Int> &cyclic_orders)
{
    std::size_t n = 1;
    std::vector<unsigned long> radix;
    for (const Int &d : cyclic_orders) {
        if (d < 1)
            throw std::domain_error("abelian table: orders must be positive");
        radix.push_back(d.get_ui());
        n *= radix.back();
    }

    FiniteGroupTable g;
    g.order = n;
    g.mul.resize(n * n);
    g.inv.resize(n);

    auto add = [&](std::size_t x, std::size_t y) {
        std::size_t out = 0, weight = 1;
        for (std::size_t i = 0; i < radix.size(); ++i) {
            unsigned long xi = (x / weight) % radix[i];
            unsigned long yi = (y / weight) % radix[i];
            out += ((xi + yi) % radix[i]) * weight;
            weight *= radix[i];
        }
        return out;
    };
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            g.mul[x * n + y] = int(add(x, y));
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t out = 0, weight = 1;
        for (std::size_t i = 0; i < radix.size(); ++i) {
            unsigned long xi = (x / weight) % radix[i];
            out += ((radix[i] - xi) % radix[i]) * weight;
            weight *= radix[i];
        }
        g.inv[x] = int(out);
    }

    if (cyclic_orders.empty()) {
        g.tag = "trivial";
    } else {
        std::ostringstream tag;
        for (std::size_t i = 0; i < cyclic_orders.size(); ++i)
            tag << (i ? "x" : "") << "Z" << cyclic_orders[i].get_str();
        g.tag = tag.str();
    }

    check_table(g);
    g.nilpotency_class = lcs_class(g);
    if (n > 1 && g.nilpotency_class != 1)
        throw std::logic_error("abelian table: class is not 1");
    return g;
}

FiniteGroupTable FiniteGroupTable::unitriangular3(const Int &p)
{
    if (!is_prime(p))
        throw std::domain_error("unitriangular3: p must be prime");
    unsigned long q = p.get_ui();
    std::size_t n = q * q * q;

    FiniteGroupTable g;
    g.order = n;
    g.mul.resize(n * n);
    g.inv.resize(n);

    // element (a, b, c) is the matrix [[1,a,b],[0,1,c],[0,0,1]]
    auto idx = [&](unsigned long a, unsigned long b, unsigned long c) {
        return (a * q + b) * q + c;
    };
    for (unsigned long a = 0; a < q; ++a)
        for (unsigned long b = 0; b < q; ++b)
            for (unsigned long c = 0; c < q; ++c) {
                std::size_t x = idx(a, b, c);
                for (unsigned long a2 = 0; a2 < q; ++a2)
                    for (unsigned long b2 = 0; b2 < q; ++b2)
                        for (unsigned long c2 = 0; c2 < q; ++c2)
                            g.mul[x * n + idx(a2, b2, c2)] = int(
                                idx((a + a2) % q, (b + b2 + a * c2) % q, (c + c2) % q));
            }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.mul[x * n + y] == 0) {
                g.inv[x] = int(y);
                break;
            }

    g.tag = "UT3_mod" + p.get_str();
    check_table(g);
    g.nilpotency_class = lcs_class(g);
    if (g.nilpotency_class != 2)
        throw std::logic_error("unitriangular3: class is not 2");
    return g;
}

namespace {

// all multisets of prime-power cyclic factors of p-power order p^total,
// largest exponent first (partitions of `total`)
void partitions(unsigned long total, unsigned long maxpart,
                std::vector<unsigned long> &cur, std::vector<std::vector<unsigned long>> &out)
{
    if (total == 0) {
        out.push_back(cur);
        return;
    }
    for (unsigned long first = std::min(total, maxpart); first >= 1; --first) {
        cur.push_back(first);
        partitions(total - first, first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<FiniteGroupTable> build_catalog(const Int &max_order, const std::vector<Int> &primes)
{
    if (max_order < 2)
        throw std::domain_error("build_catalog: max_order must be >= 2");
    for (const Int &p : primes)
        if (!is_prime(p))
            throw std::domain_error("build_catalog: catalog primes must be prime");

    std::vector<FiniteGroupTable> catalog;
    for (Int n = 2; n <= max_order; ++n) {
        auto fact = factorize(n);
        bool supported = std::all_of(fact.begin(), fact.end(), [&](const PrimePower &pp) {
            return std::find(primes.begin(), primes.end(), pp.prime) != primes.end();
        });
        if (!supported)
            continue;
        // abelian groups of order n: independent partition per prime
        std::vector<std::vector<std::vector<unsigned long>>> per_prime;
        for (const PrimePower &pp : fact) {
            std::vector<std::vector<unsigned long>> parts;
            std::vector<unsigned long> cur;
            partitions(pp.exponent, pp.exponent, cur, parts);
            per_prime.push_back(std::move(parts));
        }
        std::vector<std::size_t> choice(fact.size(), 0);
        while (true) {
            std::vector<Int> factors;
            for (std::size_t i = 0; i < fact.size(); ++i)
                for (unsigned long e : per_prime[i][choice[i]])
                    factors.push_back(pow(fact[i].prime, e));
            catalog.push_back(FiniteGroupTable::abelian(factors));
            std::size_t i = 0;
            for (; i < fact.size(); ++i) {
                if (++choice[i] < per_prime[i].size())
                    break;
                choice[i] = 0;
            }
            if (i == fact.size())
                break;
        }
    }
    for (const Int &p : primes)
        if (pow(p, 3) <= max_order)
            catalog.push_back(FiniteGroupTable::unitriangular3(p));
    return catalog;
}

std::vector<Homomorphism> enumerate_homs(const LabeledTree &tree, const FiniteGroupTable &target)
{
    tree.validate();
    if (!tree.normalized())
        throw std::domain_error("enumerate_homs: tree labels must be positive");

    // BFS order: each vertex after the first is solved against its parent
    auto adj = tree.adjacency();
    std::vector<std::size_t> order{0};
    std::vector<std::size_t> parent_edge(tree.vertices.size(), SIZE_MAX);
    std::vector<char> vis(tree.vertices.size(), 0);
    vis[0] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi)
        for (auto [w, ei] : adj[order[qi]])
            if (!vis[w]) {
                vis[w] = 1;
                parent_edge[w] = ei;
                order.push_back(w);
            }

    std::vector<Homomorphism> out;
    std::vector<int> images(tree.vertices.size(), 0);
    auto rec = [&](auto &&self, std::size_t depth) -> void {
        if (depth == order.size()) {
            out.push_back({images});
            return;
        }
        std::size_t v = order[depth];
        if (depth == 0) {
            for (std::size_t g = 0; g < target.order; ++g) {
                images[v] = int(g);
                self(self, depth + 1);
            }
            return;
        }
        const LabeledTree::Edge &e = tree.edges[parent_edge[v]];
        std::size_t par = e.u == v ? e.v : e.u;
        const Int &lab_par = e.u == v ? e.label_v : e.label_u;
        const Int &lab_v = e.u == v ? e.label_u : e.label_v;
        int rhs = target.power(images[par], lab_par);
        for (std::size_t g = 0; g < target.order; ++g)
            if (target.power(int(g), lab_v) == rhs) {
                images[v] = int(g);
                self(self, depth + 1);
            }
    };
    rec(rec, 0);
    return out;
}

namespace {

int evaluate(const FiniteGroupTable &target, const std::vector<int> &images,
             const LabeledTree &tree, const GroupWord &w)
{
    int acc = 0;
    for (const Syllable &s : w.syllables)
        acc = target.at(acc, target.power(images[tree.index_of(s.gen)], s.exp));
    return acc;
}

} // namespace

AnnihilationResult annihilation_check(const LabeledTree &tree, const GroupWord &element,
                                      const std::vector<FiniteGroupTable> &catalog)
{
    for (const Syllable &s : element.syllables)
        tree.index_of(s.gen); // unknown generators are a domain error
    for (const FiniteGroupTable &target : catalog)
        for (const Homomorphism &hom : enumerate_homs(tree, target)) {
            int img = evaluate(target, hom.images, tree, element);
            if (img != 0)
                return {false, target.tag, hom, img};
        }
    return {};
}

AnnihilationResult annihilation_check_p(const LabeledTree &tree, const GroupWord &element,
                                        const Int &p, const Int &max_order)
{
    return annihilation_check(tree, element, build_catalog(max_order, {p}));
}

bool coprime_commutator_check(const Int &k, const Int &l, const Int &s_exp, const Int &r_exp)
{
    if (k < 1 || l < 1 || s_exp < 1 || r_exp < 1)
        throw std::domain_error("coprime_commutator_check: all inputs must be positive");
    if (!divides(s_exp, k))
        throw std::domain_error("coprime_commutator_check: s_exp does not divide k");
    if (!divides(r_exp, l))
        throw std::domain_error("coprime_commutator_check: r_exp does not divide l");
    return gcd(k / s_exp, l / r_exp) == 1;
}

} // namespace gbs
