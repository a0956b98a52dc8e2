#pragma once

/* Multicompositions and multipartitions of n with r components.
 *
 * A multicomposition is a sequence of r compositions (non-negative integer
 * vectors); component k is stored padded with trailing zeros to a fixed
 * length m_k, so equality is plain componentwise equality of the normalized
 * forms.  Multipartitions are multicompositions whose components are weakly
 * decreasing.  Weights with internal zeros are first-class objects here:
 * (1,0,1) and (2,0,0) are distinct length-3 compositions.
 *
 * The canonical listing order used everywhere (matrix rows and columns,
 * serialized artifacts, caches) is descending lexicographic order on the
 * flattened padded part vector.  Because dominance-comparable elements with
 * equal size already differ lexicographically in the same direction, this is
 * a total order refining "more dominant first".
 */

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cycloschur {

class Multicomposition {
public:
    Multicomposition() = default;

    /* parts[k] may be shorter than bound[k] (it is padded) but not longer
     * once trailing zeros are stripped. */
    Multicomposition(std::vector<std::vector<int>> parts, const std::vector<int>& bound) {
        if (parts.size() != bound.size())
            throw std::invalid_argument("multicomposition: need one bound per component");
        comp_ = std::move(parts);
        for (std::size_t k = 0; k < comp_.size(); ++k) {
            auto& c = comp_[k];
            while (!c.empty() && c.back() == 0) c.pop_back();
            if (static_cast<int>(c.size()) > bound[k])
                throw std::invalid_argument("multicomposition: component exceeds its length bound");
            for (int p : c)
                if (p < 0) throw std::invalid_argument("multicomposition: negative part");
            c.resize(bound[k], 0);
        }
    }

    int r() const { return static_cast<int>(comp_.size()); }

    std::vector<int> bounds() const {
        std::vector<int> m;
        m.reserve(comp_.size());
        for (const auto& c : comp_) m.push_back(static_cast<int>(c.size()));
        return m;
    }

    int size() const {
        int s = 0;
        for (const auto& c : comp_) s += std::accumulate(c.begin(), c.end(), 0);
        return s;
    }

    const std::vector<int>& component(int k) const { return comp_.at(k); }          /* 0-based */
    int part(int k, int i) const { return comp_.at(k).at(i); }                      /* 0-based */
    int component_size(int k) const {
        const auto& c = comp_.at(k);
        return std::accumulate(c.begin(), c.end(), 0);
    }

    std::vector<int> flatten() const {
        std::vector<int> f;
        for (const auto& c : comp_) f.insert(f.end(), c.begin(), c.end());
        return f;
    }

    bool is_partition() const {
        for (const auto& c : comp_)
            for (std::size_t i = 1; i < c.size(); ++i)
                if (c[i] > c[i - 1]) return false;
        return true;
    }

    /* Text form: parts joined by ',', components by '|', trailing zeros
     * dropped, e.g. ((2,1),(1)) -> "2,1|1" and ((),(1)) -> "|1". */
    std::string text() const {
        std::string out;
        for (int k = 0; k < r(); ++k) {
            if (k) out += '|';
            const auto& c = comp_[k];
            int len = static_cast<int>(c.size());
            while (len > 0 && c[len - 1] == 0) --len;
            for (int i = 0; i < len; ++i) {
                if (i) out += ',';
                out += std::to_string(c[i]);
            }
        }
        return out;
    }

    static Multicomposition parse(const std::string& text, const std::vector<int>& bound) {
        std::vector<std::vector<int>> parts;
        std::string seg;
        std::stringstream whole(text);
        bool first = true;
        /* split on '|' keeping empty segments */
        std::size_t pos = 0;
        while (true) {
            std::size_t bar = text.find('|', pos);
            std::string component = text.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
            std::vector<int> c;
            std::size_t p = 0;
            while (p < component.size()) {
                std::size_t comma = component.find(',', p);
                std::string tok = component.substr(p, comma == std::string::npos ? std::string::npos : comma - p);
                if (tok.empty()) throw std::invalid_argument("multicomposition: empty part in '" + text + "'");
                c.push_back(std::stoi(tok));
                if (comma == std::string::npos) break;
                p = comma + 1;
            }
            parts.push_back(std::move(c));
            if (bar == std::string::npos) break;
            pos = bar + 1;
        }
        (void)whole; (void)seg; (void)first;
        return Multicomposition(std::move(parts), bound);
    }

    bool operator==(const Multicomposition& o) const { return comp_ == o.comp_; }
    bool operator!=(const Multicomposition& o) const { return comp_ != o.comp_; }

    /* Canonical listing order: descending lex on the flattened vector.
     * Shapes (r, bounds) must agree for the order to be meaningful; mixed
     * shapes fall back to comparing the shape first so std::map stays sane. */
    bool operator<(const Multicomposition& o) const {
        if (comp_.size() != o.comp_.size()) return comp_.size() < o.comp_.size();
        auto b = bounds(), ob = o.bounds();
        if (b != ob) return b < ob;
        return flatten() > o.flatten();
    }

private:
    std::vector<std::vector<int>> comp_;
};

/* A multicomposition with weakly decreasing components. */
class Multipartition : public Multicomposition {
public:
    Multipartition() = default;
    explicit Multipartition(const Multicomposition& mc) : Multicomposition(mc) {
        if (!is_partition())
            throw std::invalid_argument("multipartition: components must be weakly decreasing");
    }
    Multipartition(std::vector<std::vector<int>> parts, const std::vector<int>& bound)
        : Multipartition(Multicomposition(std::move(parts), bound)) {}
};

/* A split of the r components into g consecutive blocks of positive sizes. */
using PSplit = std::vector<int>;

/* Block sizes n_k = |mu| restricted to block k, plus their prefix sums
 * a_1 = 0, a_k = n_1 + ... + n_{k-1}. */
struct AlphaVector {
    std::vector<int> n;
    std::vector<int> a;
    bool operator==(const AlphaVector& o) const { return n == o.n; }
    bool operator!=(const AlphaVector& o) const { return n != o.n; }
};

inline void validate_psplit(const PSplit& p, int r) {
    int sum = 0;
    for (int x : p) {
        if (x <= 0) throw std::invalid_argument("p-split parts must be positive");
        sum += x;
    }
    if (sum != r) throw std::invalid_argument("p-split must sum to r");
}

/* All multicompositions of n with component length bounds m, in canonical
 * (descending flattened lex) order.  The recursion assigns each flattened
 * slot the largest value first, so output is generated already sorted. */
inline std::vector<Multicomposition> enumerate_lambda(int n, int r, const std::vector<int>& m) {
    if (r < 1) throw std::invalid_argument("enumerate: r must be >= 1");
    if (static_cast<int>(m.size()) != r) throw std::invalid_argument("enumerate: need r length bounds");
    if (n < 0) throw std::invalid_argument("enumerate: n must be >= 0");
    int slots = std::accumulate(m.begin(), m.end(), 0);
    std::vector<Multicomposition> out;
    std::vector<int> flat(slots, 0);
    auto emit = [&]() {
        std::vector<std::vector<int>> parts;
        int at = 0;
        for (int k = 0; k < r; ++k) {
            parts.emplace_back(flat.begin() + at, flat.begin() + at + m[k]);
            at += m[k];
        }
        out.emplace_back(std::move(parts), m);
    };
    auto rec = [&](auto&& self, int slot, int remaining) -> void {
        if (slot == slots) {
            if (remaining == 0) emit();
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            flat[slot] = v;
            self(self, slot + 1, remaining - v);
        }
        flat[slot] = 0;
    };
    if (slots == 0) {
        if (n == 0) emit();
        return out;
    }
    rec(rec, 0, n);
    return out;
}

inline std::vector<Multipartition> enumerate_lambda_plus(int n, int r, const std::vector<int>& m) {
    std::vector<Multipartition> out;
    for (const auto& mc : enumerate_lambda(n, r, m))
        if (mc.is_partition()) out.emplace_back(mc);
    return out;
}

enum class DominanceCmp { equal, greater, less, incomparable };

/* Dominance partial order on multicompositions of the same size and shape:
 * mu dominates nu iff every prefix statistic
 *   |mu^(1)| + ... + |mu^(l-1)| + mu^(l)_1 + ... + mu^(l)_k
 * weakly exceeds the corresponding statistic of nu. */
inline DominanceCmp dominance_cmp(const Multicomposition& a, const Multicomposition& b) {
    if (a.r() != b.r() || a.bounds() != b.bounds() || a.size() != b.size())
        throw std::invalid_argument("dominance_cmp: shape mismatch");
    bool a_ge = true, b_ge = true;
    long long pa = 0, pb = 0;
    for (int l = 0; l < a.r(); ++l) {
        long long rowa = pa, rowb = pb;
        const auto& ca = a.component(l);
        const auto& cb = b.component(l);
        for (std::size_t k = 0; k < ca.size(); ++k) {
            rowa += ca[k];
            rowb += cb[k];
            if (rowa < rowb) a_ge = false;
            if (rowb < rowa) b_ge = false;
        }
        pa = rowa;
        pb = rowb;
    }
    if (a_ge && b_ge) return DominanceCmp::equal;
    if (a_ge) return DominanceCmp::greater;
    if (b_ge) return DominanceCmp::less;
    return DominanceCmp::incomparable;
}

inline bool dominates(const Multicomposition& a, const Multicomposition& b) {
    auto c = dominance_cmp(a, b);
    return c == DominanceCmp::equal || c == DominanceCmp::greater;
}

/* Component-block sizes under a split p of the r components. */
inline AlphaVector alpha_p(const Multicomposition& mc, const PSplit& p) {
    validate_psplit(p, mc.r());
    AlphaVector alpha;
    int at = 0, acc = 0;
    for (int g : p) {
        int s = 0;
        for (int j = 0; j < g; ++j) s += mc.component_size(at + j);
        alpha.a.push_back(acc);
        alpha.n.push_back(s);
        acc += s;
        at += g;
    }
    return alpha;
}

/* Slice the component list into the blocks of p; block k keeps its
 * components' length bounds. */
inline std::vector<Multicomposition> split(const Multicomposition& mc, const PSplit& p) {
    validate_psplit(p, mc.r());
    std::vector<Multicomposition> out;
    auto m = mc.bounds();
    int at = 0;
    for (int g : p) {
        std::vector<std::vector<int>> parts;
        std::vector<int> bound;
        for (int j = 0; j < g; ++j) {
            parts.push_back(mc.component(at + j));
            bound.push_back(m[at + j]);
        }
        out.emplace_back(std::move(parts), bound);
        at += g;
    }
    return out;
}

} // namespace cycloschur
