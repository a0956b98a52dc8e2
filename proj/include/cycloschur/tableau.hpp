#pragma once

/* Standard and semistandard multitableaux.
 *
 * A standard tableau of shape λ (an r-partition of n) assigns 1..n
 * bijectively to the boxes of λ, increasing along rows and down columns
 * within each component.  t^λ denotes the row-reading ("superstandard")
 * filling: 1,2,3,... along rows, top to bottom, component 1 first.
 *
 * A semistandard tableau of shape λ and type μ (an r-composition) labels
 * each box with a pair (i,k) — row i of component k of μ — such that
 *   - exactly μ^(k)_i boxes carry the label (i,k),
 *   - in component s of λ every label has k ≥ s,
 *   - rows weakly increase and columns strictly increase in the order
 *     (i,k) < (j,l)  iff  k < l, or k = l and i < j.
 */

#include <optional>
#include <tuple>

#include "cycloschur/multipartition.hpp"
#include "cycloschur/permutation.hpp"

namespace cycloschur {

struct Box {
    int comp;   /* 0-based component */
    int row;    /* 0-based row within component */
    int col;    /* 0-based column */
    auto operator<=>(const Box&) const = default;
};

/* Boxes of a multicomposition in reading order: component, then row, then
 * column.  Rows of length zero (including internal zeros) contribute none. */
inline std::vector<Box> boxes_in_reading_order(const Multicomposition& shape) {
    std::vector<Box> out;
    for (int k = 0; k < shape.r(); ++k) {
        const auto& c = shape.component(k);
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            for (int j = 0; j < c[i]; ++j) out.push_back({k, i, j});
    }
    return out;
}

class StandardTableau {
public:
    StandardTableau() = default;
    StandardTableau(Multipartition shape, std::vector<int> values_in_reading_order)
        : shape_(std::move(shape)), vals_(std::move(values_in_reading_order)) {
        boxes_ = boxes_in_reading_order(shape_);
        if (vals_.size() != boxes_.size())
            throw std::invalid_argument("standard tableau: wrong number of entries");
    }

    const Multipartition& shape() const { return shape_; }
    int n() const { return static_cast<int>(vals_.size()); }

    int value_at(const Box& b) const {
        for (std::size_t idx = 0; idx < boxes_.size(); ++idx)
            if (boxes_[idx] == b) return vals_[idx];
        throw std::out_of_range("standard tableau: no such box");
    }

    Box box_of(int value) const {
        for (std::size_t idx = 0; idx < boxes_.size(); ++idx)
            if (vals_[idx] == value) return boxes_[idx];
        throw std::out_of_range("standard tableau: no such value");
    }

    const std::vector<Box>& boxes() const { return boxes_; }
    const std::vector<int>& values() const { return vals_; }

    bool is_standard() const {
        std::vector<bool> seen(n(), false);
        for (int v : vals_) {
            if (v < 1 || v > n() || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
        for (std::size_t a = 0; a < boxes_.size(); ++a)
            for (std::size_t b = 0; b < boxes_.size(); ++b) {
                if (boxes_[a].comp != boxes_[b].comp) continue;
                /* right neighbour and below neighbour must increase */
                if (boxes_[a].row == boxes_[b].row && boxes_[b].col == boxes_[a].col + 1 &&
                    vals_[b] <= vals_[a])
                    return false;
                if (boxes_[a].col == boxes_[b].col && boxes_[b].row == boxes_[a].row + 1 &&
                    vals_[b] <= vals_[a])
                    return false;
            }
        return true;
    }

    bool operator==(const StandardTableau& o) const {
        return shape_ == o.shape_ && vals_ == o.vals_;
    }
    bool operator<(const StandardTableau& o) const { return vals_ < o.vals_; }

private:
    Multipartition shape_;
    std::vector<Box> boxes_;  /* reading order */
    std::vector<int> vals_;   /* entry per box, same order */
};

/* t^λ: values 1..n in reading order. */
inline StandardTableau superstandard(const Multipartition& shape) {
    std::vector<int> vals(boxes_in_reading_order(shape).size());
    std::iota(vals.begin(), vals.end(), 1);
    return StandardTableau(shape, std::move(vals));
}

/* All standard tableaux, in a deterministic order (ascending by the entry
 * vector in reading order; t^λ comes first). */
inline std::vector<StandardTableau> enumerate_std(const Multipartition& shape) {
    auto boxes = boxes_in_reading_order(shape);
    const int n = static_cast<int>(boxes.size());
    std::vector<int> vals(n, 0);
    std::vector<StandardTableau> out;

    /* Peel the largest value off a removable corner, recursing on the rest.
     * current[k][i] = number of boxes still unfilled in that row. */
    std::vector<std::vector<int>> current;
    for (int k = 0; k < shape.r(); ++k) current.push_back(shape.component(k));

    auto index_of_box = [&](int k, int i, int j) {
        for (int idx = 0; idx < n; ++idx)
            if (boxes[idx].comp == k && boxes[idx].row == i && boxes[idx].col == j) return idx;
        return -1;
    };
    auto rec = [&](auto&& self, int next_value_down) -> void {
        if (next_value_down == 0) {
            out.emplace_back(shape, vals);
            return;
        }
        for (int k = 0; k < shape.r(); ++k) {
            auto& c = current[k];
            for (int i = 0; i < static_cast<int>(c.size()); ++i) {
                if (c[i] == 0) continue;
                const bool corner =
                    (i + 1 >= static_cast<int>(c.size())) || (c[i + 1] < c[i]);
                if (!corner) continue;
                int j = c[i] - 1;
                vals[index_of_box(k, i, j)] = next_value_down;
                c[i] -= 1;
                self(self, next_value_down - 1);
                c[i] += 1;
            }
        }
    };
    rec(rec, n);
    std::sort(out.begin(), out.end());
    return out;
}

/* Entry of a semistandard tableau: (row, comp), both 1-based. */
struct SSEntry {
    int row;
    int comp;
    bool operator==(const SSEntry& o) const { return row == o.row && comp == o.comp; }
    bool operator!=(const SSEntry& o) const { return !(*this == o); }
    /* (i,k) < (j,l) iff k < l or (k = l and i < j) */
    bool operator<(const SSEntry& o) const {
        if (comp != o.comp) return comp < o.comp;
        return row < o.row;
    }
    bool operator<=(const SSEntry& o) const { return *this < o || *this == o; }
};

class SemistandardTableau {
public:
    SemistandardTableau() = default;
    SemistandardTableau(Multipartition shape, Multicomposition type,
                        std::vector<SSEntry> entries_in_reading_order)
        : shape_(std::move(shape)), type_(std::move(type)), ents_(std::move(entries_in_reading_order)) {
        boxes_ = boxes_in_reading_order(shape_);
        if (ents_.size() != boxes_.size())
            throw std::invalid_argument("semistandard tableau: wrong number of entries");
    }

    const Multipartition& shape() const { return shape_; }
    const Multicomposition& type() const { return type_; }
    const std::vector<Box>& boxes() const { return boxes_; }
    const std::vector<SSEntry>& entries() const { return ents_; }

    bool is_semistandard() const {
        /* multiplicity of (i,k) = type^(k)_i */
        for (int k = 0; k < type_.r(); ++k) {
            const auto& c = type_.component(k);
            for (int i = 0; i < static_cast<int>(c.size()); ++i) {
                int count = 0;
                for (const auto& e : ents_)
                    if (e.comp == k + 1 && e.row == i + 1) ++count;
                if (count != c[i]) return false;
            }
        }
        for (const auto& e : ents_)
            if (e.row < 1 || e.comp < 1 || e.comp > type_.r()) return false;
        for (std::size_t a = 0; a < boxes_.size(); ++a) {
            if (ents_[a].comp < boxes_[a].comp + 1) return false;  /* k >= component of box */
            for (std::size_t b = 0; b < boxes_.size(); ++b) {
                if (boxes_[a].comp != boxes_[b].comp) continue;
                if (boxes_[a].row == boxes_[b].row && boxes_[b].col == boxes_[a].col + 1 &&
                    !(ents_[a] <= ents_[b]))
                    return false;
                if (boxes_[a].col == boxes_[b].col && boxes_[b].row == boxes_[a].row + 1 &&
                    !(ents_[a] < ents_[b]))
                    return false;
            }
        }
        return true;
    }

    std::string text() const {
        std::string out;
        for (std::size_t idx = 0; idx < boxes_.size(); ++idx) {
            if (idx && boxes_[idx].comp != boxes_[idx - 1].comp) out += " | ";
            else if (idx && boxes_[idx].row != boxes_[idx - 1].row) out += " / ";
            else if (idx) out += ' ';
            out += "(" + std::to_string(ents_[idx].row) + "," + std::to_string(ents_[idx].comp) + ")";
        }
        return out;
    }

    bool operator==(const SemistandardTableau& o) const {
        return shape_ == o.shape_ && type_ == o.type_ && ents_ == o.ents_;
    }
    bool operator<(const SemistandardTableau& o) const {
        auto key = [](const SemistandardTableau& t) {
            std::vector<std::pair<int, int>> v;
            for (const auto& e : t.ents_) v.emplace_back(e.comp, e.row);
            return v;
        };
        return key(*this) < key(o);
    }

private:
    Multipartition shape_;
    Multicomposition type_;
    std::vector<Box> boxes_;
    std::vector<SSEntry> ents_;
};

/* T^λ: every box of row i, component k is labelled (i,k). */
inline SemistandardTableau superstandard_ssyt(const Multipartition& shape) {
    std::vector<SSEntry> ents;
    for (const Box& b : boxes_in_reading_order(shape))
        ents.push_back({b.row + 1, b.comp + 1});
    return SemistandardTableau(shape, shape, std::move(ents));
}

/* All semistandard tableaux of shape λ and type μ, deterministically ordered. */
inline std::vector<SemistandardTableau> enumerate_ssyt(const Multipartition& shape,
                                                       const Multicomposition& type) {
    if (shape.size() != type.size())
        throw std::invalid_argument("enumerate_ssyt: |shape| != |type|");
    auto boxes = boxes_in_reading_order(shape);
    const int n = static_cast<int>(boxes.size());

    /* candidate labels (i,k) with positive multiplicity, ascending */
    std::vector<SSEntry> labels;
    std::vector<int> remaining;
    for (int k = 0; k < type.r(); ++k) {
        const auto& c = type.component(k);
        for (int i = 0; i < static_cast<int>(c.size()); ++i)
            if (c[i] > 0) {
                labels.push_back({i + 1, k + 1});
                remaining.push_back(c[i]);
            }
    }
    std::sort(labels.begin(), labels.end());  /* already sorted by construction, keep explicit */

    std::vector<SSEntry> ents(n);
    std::vector<SemistandardTableau> out;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == n) {
            out.emplace_back(shape, type, ents);
            return;
        }
        const Box& b = boxes[at];
        for (std::size_t li = 0; li < labels.size(); ++li) {
            if (remaining[li] == 0) continue;
            const SSEntry& e = labels[li];
            if (e.comp < b.comp + 1) continue;
            bool ok = true;
            if (b.col > 0) {  /* left neighbour is the previous reading-order box */
                const SSEntry& left = ents[at - 1];
                if (!(left <= e)) ok = false;
            }
            if (ok && b.row > 0) {
                for (int idx = 0; idx < at; ++idx)
                    if (boxes[idx].comp == b.comp && boxes[idx].col == b.col &&
                        boxes[idx].row == b.row - 1) {
                        if (!(ents[idx] < e)) ok = false;
                        break;
                    }
            }
            if (!ok) continue;
            ents[at] = e;
            remaining[li] -= 1;
            self(self, at + 1);
            remaining[li] += 1;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

/* ω = ((),…,(),(1^n)): the column shape in the last component. */
inline Multipartition omega_shape(int n, int r, const std::vector<int>& m) {
    if (static_cast<int>(m.size()) != r) throw std::invalid_argument("omega: need r bounds");
    if (m.back() < n) throw std::invalid_argument("omega: m_r must be >= n");
    std::vector<std::vector<int>> parts(r);
    parts[r - 1].assign(n, 1);
    return Multipartition(std::move(parts), m);
}

/* Replace entry j of t by the (row, component) of j in the row-reading
 * filling of μ; return the result if semistandard. */
inline std::optional<SemistandardTableau> type_map(const StandardTableau& t,
                                                   const Multicomposition& mu) {
    if (t.n() != mu.size()) throw std::invalid_argument("type_map: |t| != |mu|");
    auto mu_boxes = boxes_in_reading_order(mu);
    std::vector<SSEntry> entry_of_value(t.n() + 1);
    for (int j = 1; j <= t.n(); ++j)
        entry_of_value[j] = {mu_boxes[j - 1].row + 1, mu_boxes[j - 1].comp + 1};
    std::vector<SSEntry> ents;
    ents.reserve(t.n());
    for (int v : t.values()) ents.push_back(entry_of_value[v]);
    SemistandardTableau s(t.shape(), mu, std::move(ents));
    if (!s.is_semistandard()) return std::nullopt;
    return s;
}

/* T_0^p(λ,μ): equal to T_0(λ,μ) when α_p(λ) = α_p(μ), else empty. */
inline std::vector<SemistandardTableau> enumerate_ssyt_p(const Multipartition& shape,
                                                         const Multicomposition& type,
                                                         const PSplit& p) {
    if (alpha_p(shape, p) != alpha_p(type, p)) return {};
    return enumerate_ssyt(shape, type);
}

/* Componentwise restriction-and-relabel of T under a split p: block k keeps
 * the boxes of its components, with entry components shifted down by the
 * block offset.  Only meaningful when α_p(shape) = α_p(type); entries of a
 * block's boxes then lie inside that block, which is validated here. */
inline std::vector<SemistandardTableau> split_ssyt(const SemistandardTableau& T, const PSplit& p) {
    const Multipartition& shape = T.shape();
    const Multicomposition& type = T.type();
    auto shapes = split(shape, p);
    auto types = split(type, p);
    std::vector<SemistandardTableau> out;
    int offset = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::vector<SSEntry> ents;
        for (std::size_t idx = 0; idx < T.boxes().size(); ++idx) {
            const Box& b = T.boxes()[idx];
            if (b.comp < offset || b.comp >= offset + p[k]) continue;
            const SSEntry& e = T.entries()[idx];
            if (e.comp <= offset || e.comp > offset + p[k])
                throw std::runtime_error("split_ssyt: entry escapes its component block");
            ents.push_back({e.row, e.comp - offset});
        }
        out.emplace_back(Multipartition(shapes[k]), types[k], std::move(ents));
        offset += p[k];
    }
    return out;
}

/* d(t): the permutation with t = t^λ · d(t), i.e. d(t)(j) = entry of t at
 * the box where t^λ has j.  d(t^λ) = identity. */
inline Perm d_perm(const StandardTableau& t) {
    StandardTableau tsup = superstandard(t.shape());
    std::vector<int> img(t.n());
    for (int j = 1; j <= t.n(); ++j) img[j - 1] = t.value_at(tsup.box_of(j));
    return Perm::from_one_line(std::move(img));
}

} // namespace cycloschur
