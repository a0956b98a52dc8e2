#pragma once

/* Permutations of {1..n} in one-line notation together with the Coxeter
 * bookkeeping needed by the Hecke-algebra code: length (= inversion count),
 * reduced words, products with adjacent transpositions s_i = (i,i+1),
 * inverses, and enumeration of symmetric groups and Young subgroups.
 *
 * Composition convention: (a * b)(j) = b(a(j)), i.e. "apply a first, then b".
 * With this convention a product of transpositions read left to right is a
 * word in the Coxeter generators in the same order as the corresponding
 * product of Hecke generators T_{s_i}.
 */

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace cycloschur {

class Perm {
public:
    Perm() = default;
    explicit Perm(int n) : img_(n) { std::iota(img_.begin(), img_.end(), 1); }

    static Perm from_one_line(std::vector<int> img) {
        Perm w;
        w.img_ = std::move(img);
        std::vector<bool> seen(w.img_.size(), false);
        for (int v : w.img_) {
            if (v < 1 || v > static_cast<int>(w.img_.size()) || seen[v - 1])
                throw std::invalid_argument("Perm: not a permutation");
            seen[v - 1] = true;
        }
        return w;
    }

    int n() const { return static_cast<int>(img_.size()); }

    /* image of j, 1-based */
    int operator()(int j) const {
        assert(j >= 1 && j <= n());
        return img_[j - 1];
    }

    const std::vector<int>& one_line() const { return img_; }

    bool is_identity() const {
        for (int j = 1; j <= n(); ++j)
            if (img_[j - 1] != j) return false;
        return true;
    }

    Perm inverse() const {
        Perm w;
        w.img_.resize(img_.size());
        for (int j = 1; j <= n(); ++j) w.img_[img_[j - 1] - 1] = j;
        return w;
    }

    friend Perm operator*(const Perm& a, const Perm& b) {
        assert(a.n() == b.n());
        Perm w;
        w.img_.resize(a.img_.size());
        for (int j = 1; j <= a.n(); ++j) w.img_[j - 1] = b(a(j));
        return w;
    }

    /* w * s_i: swaps the values i and i+1 in the one-line form. */
    Perm times_s(int i) const {
        assert(i >= 1 && i < n());
        Perm w = *this;
        for (int& v : w.img_) {
            if (v == i) v = i + 1;
            else if (v == i + 1) v = i;
        }
        return w;
    }

    /* s_i * w: swaps positions i and i+1. */
    Perm s_times(int i) const {
        assert(i >= 1 && i < n());
        Perm w = *this;
        std::swap(w.img_[i - 1], w.img_[i]);
        return w;
    }

    /* true iff l(w * s_i) = l(w) + 1 */
    bool right_ascent(int i) const {
        const Perm inv = inverse();
        return inv(i) < inv(i + 1);
    }

    int length() const {
        int inv = 0;
        for (int a = 0; a < n(); ++a)
            for (int b = a + 1; b < n(); ++b)
                if (img_[a] > img_[b]) ++inv;
        return inv;
    }

    /* A reduced word (i_1,...,i_k) with w = s_{i_1} * ... * s_{i_k}. */
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        Perm v = *this;
        while (!v.is_identity()) {
            int i = 1;
            while (v.right_ascent(i)) ++i;   /* some descent exists */
            v = v.times_s(i);                /* peel s_i off the right */
            word.push_back(i);
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    bool operator==(const Perm& o) const { return img_ == o.img_; }
    bool operator!=(const Perm& o) const { return img_ != o.img_; }
    bool operator<(const Perm& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

/* All of S_n in lexicographic one-line order. */
inline std::vector<Perm> enumerate_symmetric_group(int n) {
    std::vector<int> line(n);
    std::iota(line.begin(), line.end(), 1);
    std::vector<Perm> out;
    do {
        out.push_back(Perm::from_one_line(line));
    } while (std::next_permutation(line.begin(), line.end()));
    return out;
}

/* The Young subgroup of S_n permuting each block {b+1,...,b+len} of a list of
 * consecutive value blocks.  Blocks are given by their lengths; zero lengths
 * are allowed and contribute nothing. */
inline std::vector<Perm> enumerate_young_subgroup(int n, const std::vector<int>& block_lengths) {
    std::vector<Perm> out{Perm(n)};
    int base = 0;
    for (int len : block_lengths) {
        if (len < 0 || base + len > n) throw std::invalid_argument("young subgroup: bad block lengths");
        if (len >= 2) {
            /* all rearrangements of the values base+1 .. base+len */
            std::vector<int> vals(len);
            std::iota(vals.begin(), vals.end(), base + 1);
            std::vector<Perm> grown;
            do {
                for (const Perm& w : out) {
                    Perm v = w; /* compose: send base+j to vals[j-1] */
                    std::vector<int> img = v.one_line();
                    for (int j = 0; j < len; ++j) img[base + j] = vals[j];
                    grown.push_back(Perm::from_one_line(img));
                }
            } while (std::next_permutation(vals.begin(), vals.end()));
            out.swap(grown);
        }
        base += len;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* Dense lookup tables for one symmetric group; used as the permutation part
 * of the Hecke normal-form basis.  Sizes stay tiny (n <= 6). */
struct PermTable {
    int n = 0;
    std::vector<Perm> elems;                 /* lex order */
    std::map<std::vector<int>, int> index_of;
    std::vector<int> length;
    std::vector<int> inverse;                /* index of w^{-1} */
    std::vector<std::vector<int>> rmul_s;    /* rmul_s[idx][i-1] = index of w*s_i */
    std::vector<std::vector<int>> word;      /* reduced word per element */

    explicit PermTable(int n_) : n(n_) {
        elems = enumerate_symmetric_group(n);
        for (int i = 0; i < static_cast<int>(elems.size()); ++i)
            index_of[elems[i].one_line()] = i;
        length.reserve(elems.size());
        inverse.reserve(elems.size());
        for (const Perm& w : elems) {
            length.push_back(w.length());
            inverse.push_back(index_of.at(w.inverse().one_line()));
            word.push_back(w.reduced_word());
            std::vector<int> row;
            for (int i = 1; i < n; ++i)
                row.push_back(index_of.at(w.times_s(i).one_line()));
            rmul_s.push_back(std::move(row));
        }
    }

    int id() const { return index_of.at(Perm(n).one_line()); }
    int size() const { return static_cast<int>(elems.size()); }
};

} // namespace cycloschur
