#include "crys/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace crys {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t CyclicFactor::order() const {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < n; ++i) r *= p;
    return r;
}

namespace {

// a = (12)(34), b = (123) as 0-based image tables.
const std::uint32_t kA4Gen_a[4] = {1, 0, 3, 2};
const std::uint32_t kA4Gen_b[4] = {1, 2, 0, 3};

GroupElement perm_compose(const GroupElement& g, const GroupElement& h) {
    // (gh)(x) = g(h(x)): g after h.
    GroupElement r;
    r.data.resize(4);
    for (std::size_t i = 0; i < 4; ++i) r.data[i] = g.data[h.data[i]];
    return r;
}

}  // namespace

HolonomyGroup HolonomyGroup::cyclic(std::vector<CyclicFactor> factors) {
    if (factors.empty()) throw std::invalid_argument("cyclic: no factors");
    std::set<std::uint64_t> primes;
    for (const auto& f : factors) {
        if (!is_prime(f.p))
            throw std::invalid_argument("cyclic: " + std::to_string(f.p) + " is not prime");
        if (f.n < 1) throw std::invalid_argument("cyclic: factor exponent must be >= 1");
        if (!primes.insert(f.p).second)
            throw std::invalid_argument("cyclic: primes must be pairwise distinct");
    }
    HolonomyGroup g;
    g.family_ = GroupFamily::Cyclic;
    g.factors_ = std::move(factors);
    g.order_ = 1;
    for (const auto& f : g.factors_) g.order_ *= f.order();
    g.enumerate();
    return g;
}

HolonomyGroup HolonomyGroup::cyclic_constrained(std::vector<CyclicFactor> factors) {
    if (factors.empty()) throw std::invalid_argument("cyclic: no factors");
    if (factors[0].n < 3)
        throw std::invalid_argument("constraint violated: n_1 >= 3 required");
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i].n < 2)
            throw std::invalid_argument("constraint violated: n_i >= 2 required for i >= 2");
    return cyclic(std::move(factors));
}

HolonomyGroup HolonomyGroup::bi_elementary(std::uint64_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("bi_elementary: " + std::to_string(p) + " is not prime");
    HolonomyGroup g;
    g.family_ = GroupFamily::BiElementary;
    g.factors_ = {{p, 1}, {p, 1}};
    g.order_ = p * p;
    g.enumerate();
    return g;
}

HolonomyGroup HolonomyGroup::alt4() {
    HolonomyGroup g;
    g.family_ = GroupFamily::Alt4;
    g.order_ = 12;
    g.enumerate();
    return g;
}

void HolonomyGroup::enumerate() {
    elements_.clear();
    switch (family_) {
        case GroupFamily::Cyclic: {
            std::vector<std::uint64_t> orders;
            for (const auto& f : factors_) orders.push_back(f.order());
            std::vector<std::uint32_t> t(factors_.size(), 0);
            for (std::uint64_t c = 0; c < order_; ++c) {
                elements_.push_back({std::vector<std::uint32_t>(t)});
                for (std::size_t i = factors_.size(); i-- > 0;) {
                    if (++t[i] < orders[i]) break;
                    t[i] = 0;
                }
            }
            break;
        }
        case GroupFamily::BiElementary: {
            auto p = static_cast<std::uint32_t>(factors_[0].p);
            for (std::uint32_t i = 0; i < p; ++i)
                for (std::uint32_t j = 0; j < p; ++j)
                    elements_.push_back({{i, j}});
            break;
        }
        case GroupFamily::Alt4: {
            GroupElement a{{kA4Gen_a[0], kA4Gen_a[1], kA4Gen_a[2], kA4Gen_a[3]}};
            GroupElement b{{kA4Gen_b[0], kA4Gen_b[1], kA4Gen_b[2], kA4Gen_b[3]}};
            std::set<GroupElement> seen;
            GroupElement id{{0, 1, 2, 3}};
            seen.insert(id);
            std::vector<GroupElement> frontier{id};
            while (!frontier.empty()) {
                std::vector<GroupElement> next;
                for (const auto& e : frontier)
                    for (const auto& gen : {a, b}) {
                        GroupElement f = perm_compose(e, gen);
                        if (seen.insert(f).second) next.push_back(f);
                    }
                frontier = std::move(next);
            }
            elements_.assign(seen.begin(), seen.end());
            // Identity first, rest in lexicographic order (identity is
            // lexicographically least among even permutations anyway).
            std::sort(elements_.begin(), elements_.end());
            break;
        }
    }
}

GroupElement HolonomyGroup::identity() const {
    switch (family_) {
        case GroupFamily::Cyclic:
            return {std::vector<std::uint32_t>(factors_.size(), 0)};
        case GroupFamily::BiElementary:
            return {{0, 0}};
        case GroupFamily::Alt4:
            return {{0, 1, 2, 3}};
    }
    throw std::logic_error("unreachable");
}

GroupElement HolonomyGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    switch (family_) {
        case GroupFamily::Cyclic: {
            GroupElement r = a;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                r.data[i] = static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(a.data[i]) + b.data[i]) % factors_[i].order());
            return r;
        }
        case GroupFamily::BiElementary: {
            auto p = static_cast<std::uint32_t>(factors_[0].p);
            return {{(a.data[0] + b.data[0]) % p, (a.data[1] + b.data[1]) % p}};
        }
        case GroupFamily::Alt4:
            return perm_compose(a, b);
    }
    throw std::logic_error("unreachable");
}

GroupElement HolonomyGroup::inverse(const GroupElement& a) const {
    switch (family_) {
        case GroupFamily::Cyclic: {
            GroupElement r = a;
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                std::uint64_t o = factors_[i].order();
                r.data[i] = static_cast<std::uint32_t>((o - a.data[i]) % o);
            }
            return r;
        }
        case GroupFamily::BiElementary: {
            auto p = static_cast<std::uint32_t>(factors_[0].p);
            return {{(p - a.data[0]) % p, (p - a.data[1]) % p}};
        }
        case GroupFamily::Alt4: {
            GroupElement r;
            r.data.resize(4);
            for (std::uint32_t i = 0; i < 4; ++i) r.data[a.data[i]] = i;
            return r;
        }
    }
    throw std::logic_error("unreachable");
}

GroupElement HolonomyGroup::power(const GroupElement& a, long e) const {
    GroupElement base = e < 0 ? inverse(a) : a;
    unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    GroupElement r = identity();
    while (k) {
        if (k & 1) r = multiply(r, base);
        base = multiply(base, base);
        k >>= 1;
    }
    return r;
}

std::uint64_t HolonomyGroup::element_order(const GroupElement& a) const {
    GroupElement e = a;
    std::uint64_t k = 1;
    while (!is_identity(e)) {
        e = multiply(e, a);
        ++k;
    }
    return k;
}

std::vector<std::pair<std::string, GroupElement>> HolonomyGroup::generators() const {
    std::vector<std::pair<std::string, GroupElement>> gens;
    switch (family_) {
        case GroupFamily::Cyclic: {
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                GroupElement e = identity();
                e.data[i] = 1;
                gens.emplace_back(factors_.size() == 1 ? "a" : "a" + std::to_string(i + 1), e);
            }
            break;
        }
        case GroupFamily::BiElementary:
            gens.emplace_back("a", GroupElement{{1, 0}});
            gens.emplace_back("b", GroupElement{{0, 1}});
            break;
        case GroupFamily::Alt4:
            gens.emplace_back("a", GroupElement{{kA4Gen_a[0], kA4Gen_a[1], kA4Gen_a[2], kA4Gen_a[3]}});
            gens.emplace_back("b", GroupElement{{kA4Gen_b[0], kA4Gen_b[1], kA4Gen_b[2], kA4Gen_b[3]}});
            break;
    }
    return gens;
}

GroupElement HolonomyGroup::generator(const std::string& name) const {
    if (family_ == GroupFamily::Cyclic && name == "a") {
        // product a_1 * ... * a_s of the factor generators
        GroupElement e = identity();
        for (auto& d : e.data) d = 1;
        return e;
    }
    for (const auto& [n, e] : generators())
        if (n == name) return e;
    throw std::invalid_argument("unknown generator '" + name + "'");
}

std::vector<std::vector<std::pair<std::string, long>>> HolonomyGroup::relators() const {
    std::vector<std::vector<std::pair<std::string, long>>> rels;
    switch (family_) {
        case GroupFamily::Cyclic: {
            auto gens = generators();
            for (std::size_t i = 0; i < factors_.size(); ++i)
                rels.push_back({{gens[i].first, static_cast<long>(factors_[i].order())}});
            for (std::size_t i = 0; i < factors_.size(); ++i)
                for (std::size_t j = i + 1; j < factors_.size(); ++j)
                    rels.push_back({{gens[i].first, 1},
                                    {gens[j].first, 1},
                                    {gens[i].first, -1},
                                    {gens[j].first, -1}});
            break;
        }
        case GroupFamily::BiElementary: {
            long p = static_cast<long>(factors_[0].p);
            rels.push_back({{"a", p}});
            rels.push_back({{"b", p}});
            rels.push_back({{"a", 1}, {"b", 1}, {"a", -1}, {"b", -1}});
            break;
        }
        case GroupFamily::Alt4:
            rels.push_back({{"a", 2}});
            rels.push_back({{"b", 3}});
            rels.push_back({{"a", 1}, {"b", 1}, {"a", 1}, {"b", 1}, {"a", 1}, {"b", 1}});
            break;
    }
    return rels;
}

std::size_t HolonomyGroup::index_of(const GroupElement& e) const {
    switch (family_) {
        case GroupFamily::Cyclic: {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < factors_.size(); ++i)
                idx = idx * factors_[i].order() + e.data[i];
            return idx;
        }
        case GroupFamily::BiElementary:
            return e.data[0] * factors_[0].p + e.data[1];
        case GroupFamily::Alt4: {
            auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
            if (it == elements_.end() || !(*it == e))
                throw std::invalid_argument("index_of: not an element");
            return static_cast<std::size_t>(it - elements_.begin());
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<std::pair<std::string, long>> HolonomyGroup::word_of(const GroupElement& e) const {
    std::vector<std::pair<std::string, long>> w;
    switch (family_) {
        case GroupFamily::Cyclic: {
            auto gens = generators();
            for (std::size_t i = 0; i < factors_.size(); ++i)
                if (e.data[i] != 0) w.push_back({gens[i].first, static_cast<long>(e.data[i])});
            break;
        }
        case GroupFamily::BiElementary: {
            if (e.data[0] != 0) w.push_back({"a", static_cast<long>(e.data[0])});
            if (e.data[1] != 0) w.push_back({"b", static_cast<long>(e.data[1])});
            break;
        }
        case GroupFamily::Alt4: {
            // breadth-first search over right multiplication, cached
            static thread_local std::map<GroupElement, std::vector<std::pair<std::string, long>>>
                cache;
            if (cache.empty()) {
                GroupElement id{{0, 1, 2, 3}};
                cache[id] = {};
                std::vector<GroupElement> frontier{id};
                auto gens = generators();
                while (!frontier.empty()) {
                    std::vector<GroupElement> next;
                    for (const auto& g : frontier)
                        for (const auto& [name, img] : gens) {
                            GroupElement f = perm_compose(g, img);
                            if (cache.count(f)) continue;
                            auto w2 = cache[g];
                            if (!w2.empty() && w2.back().first == name)
                                w2.back().second += 1;
                            else
                                w2.push_back({name, 1});
                            cache[f] = w2;
                            next.push_back(f);
                        }
                    frontier = std::move(next);
                }
            }
            auto it = cache.find(e);
            if (it == cache.end()) throw std::invalid_argument("word_of: not an element");
            return it->second;
        }
    }
    return w;
}

std::vector<std::pair<GroupElement, std::uint64_t>> HolonomyGroup::prime_order_elements() const {
    std::vector<std::pair<GroupElement, std::uint64_t>> out;
    for (const auto& e : elements_) {
        if (is_identity(e)) continue;
        std::uint64_t k = element_order(e);
        if (is_prime(k)) out.emplace_back(e, k);
    }
    return out;
}

std::vector<GroupElement> HolonomyGroup::prime_order_subgroup_reps() const {
    std::vector<GroupElement> reps;
    std::set<std::set<std::size_t>> seen;
    for (const auto& [e, q] : prime_order_elements()) {
        std::set<std::size_t> subgroup;
        GroupElement x = e;
        while (!is_identity(x)) {
            subgroup.insert(index_of(x));
            x = multiply(x, e);
        }
        if (seen.insert(subgroup).second) reps.push_back(e);
    }
    return reps;
}

GroupElement evaluate_word(const HolonomyGroup& g,
                           const std::vector<std::pair<std::string, long>>& word) {
    GroupElement r = g.identity();
    for (const auto& [name, exp] : word)
        r = g.multiply(r, g.power(g.generator(name), exp));
    return r;
}

std::string HolonomyGroup::format(const GroupElement& e) const {
    if (family_ == GroupFamily::Alt4) {
        // cycle notation on points 1..4
        std::string s;
        std::vector<bool> used(4, false);
        for (std::uint32_t start = 0; start < 4; ++start) {
            if (used[start] || e.data[start] == start) continue;
            std::string cyc = "(" + std::to_string(start + 1);
            used[start] = true;
            for (std::uint32_t x = e.data[start]; x != start; x = e.data[x]) {
                cyc += " " + std::to_string(x + 1);
                used[x] = true;
            }
            cyc += ")";
            s += cyc;
        }
        return s.empty() ? "()" : s;
    }
    std::string s;
    auto gens = generators();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (e.data[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += gens[i].first;
        if (e.data[i] > 1) s += "^" + std::to_string(e.data[i]);
    }
    return s.empty() ? "1" : s;
}

GroupElement HolonomyGroup::parse(const std::string& s) const {
    if (family_ == GroupFamily::Alt4) {
        GroupElement e = identity();
        std::size_t i = 0;
        while (i < s.size()) {
            if (s[i] != '(') throw std::invalid_argument("parse: expected '('");
            std::vector<std::uint32_t> cycle;
            ++i;
            while (i < s.size() && s[i] != ')') {
                if (isdigit(s[i])) {
                    std::uint32_t pt = s[i] - '0';
                    if (pt < 1 || pt > 4) throw std::invalid_argument("parse: point out of range");
                    cycle.push_back(pt - 1);
                }
                ++i;
            }
            if (i == s.size()) throw std::invalid_argument("parse: unclosed cycle");
            ++i;
            GroupElement c = identity();
            for (std::size_t k = 0; k < cycle.size(); ++k)
                c.data[cycle[k]] = cycle[(k + 1) % cycle.size()];
            e = multiply(e, c);
        }
        if (element_order(e) > 3 || (!is_identity(e) && index_of(e) >= size()))
            throw std::invalid_argument("parse: not an even permutation of A_4");
        return e;
    }
    if (s == "1") return identity();
    GroupElement e = identity();
    std::size_t i = 0;
    while (i < s.size()) {
        std::string name;
        while (i < s.size() && (isalpha(s[i]) || isdigit(s[i])) && s[i] != '^') {
            if (s[i] == '*') break;
            name += s[i++];
            // generator names: "a", "a1", "b", ...
            if (name.size() >= 1 && i < s.size() && (s[i] == '^' || s[i] == '*')) break;
        }
        long exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            bool neg = i < s.size() && s[i] == '-';
            if (neg) ++i;
            long v = 0;
            while (i < s.size() && isdigit(s[i])) v = v * 10 + (s[i++] - '0');
            exp = neg ? -v : v;
        }
        e = multiply(e, power(generator(name), exp));
        if (i < s.size()) {
            if (s[i] != '*') throw std::invalid_argument("parse: expected '*'");
            ++i;
        }
    }
    return e;
}

}  // namespace crys
