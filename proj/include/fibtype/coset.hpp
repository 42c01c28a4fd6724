#pragma once

#include "fibtype/words.hpp"

#include <cstdint>
#include <deque>
#include <optional>
#include <utility>

namespace fibtype {

struct CosetStats {
    uint64_t cosets_defined = 0;
    uint64_t coincidences = 0;
    uint64_t lookaheads = 0;
};

struct CosetResult {
    enum class Outcome { Closed, Overflow };
    Outcome outcome = Outcome::Overflow;
    uint64_t order = 0;  // live cosets on closure
    uint64_t limit = 0;  // max_cosets that was exceeded
    CosetStats stats;

    bool closed() const { return outcome == Outcome::Closed; }
};

/// HLT coset enumeration with row filling, union-find coincidence handling
/// and a lookahead/compaction pass when the table fills. Deterministic for a
/// fixed input. Orders are certified only on closure; Overflow is never
/// interpreted as infinite.
class CosetEnumerator {
  public:
    CosetEnumerator(const CyclicPresentation& p, uint32_t max_cosets)
        : n_(p.n), cols_(2 * p.n), max_(max_cosets) {
        if (max_cosets < 1) throw std::invalid_argument("enumerate: max_cosets must be >= 1");
        for (const Word& r : p.relators()) relators_.push_back(to_cols(r));
    }

    CosetResult run(const std::vector<Word>& subgroup) {
        define_first();
        for (const Word& u : subgroup) {
            if (u.rank() != n_)
                throw std::invalid_argument("enumerate: subgroup word rank differs from n");
            if (!scan_and_fill(0, to_cols(u))) return overflow();
            drain();
        }
        uint32_t alpha = 0;
        for (;;) {
            while (alpha < rows()) {
                if (dead(alpha)) { ++alpha; continue; }
                if (!process_row(alpha)) {
                    if (!lookahead_and_compact(alpha)) return overflow();
                    continue;  // reprocess at the remapped index
                }
                ++alpha;
            }
            // a coincidence cascade can leave a transferred hole; resweep
            if (certified()) break;
            alpha = 0;
        }
        CosetResult res;
        res.outcome = CosetResult::Outcome::Closed;
        res.order = live_;
        res.limit = max_;
        res.stats = stats_;
        return res;
    }

  private:
    static constexpr uint32_t UNDEF = 0xFFFFFFFFu;

    int n_, cols_;
    uint32_t max_;
    std::vector<std::vector<int>> relators_;
    std::vector<uint32_t> table_;   // rows * cols_
    std::vector<uint32_t> parent_;  // union-find; parent_[i] == i iff live
    std::deque<uint32_t> queue_;
    uint32_t live_ = 0;
    CosetStats stats_;

    std::vector<int> to_cols(const Word& w) const {
        std::vector<int> out;
        for (const Letter& l : w.letters()) out.push_back(2 * l.gen + (l.sign > 0 ? 0 : 1));
        return out;
    }
    static int inv_col(int c) { return c ^ 1; }

    uint32_t rows() const { return static_cast<uint32_t>(parent_.size()); }
    bool dead(uint32_t a) const { return parent_[a] != a; }
    uint32_t& at(uint32_t a, int c) { return table_[uint64_t(a) * cols_ + c]; }

    uint32_t rep(uint32_t a) {
        uint32_t r = a;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[a] != r) a = std::exchange(parent_[a], r);
        return r;
    }

    /// Resolve an entry to its representative, updating in place.
    uint32_t resolve(uint32_t a, int c) {
        uint32_t e = at(a, c);
        if (e == UNDEF || parent_[e] == e) return e;
        return at(a, c) = rep(e);
    }

    void define_first() {
        parent_.push_back(0);
        table_.assign(cols_, UNDEF);
        live_ = 1;
        stats_.cosets_defined = 1;
    }

    bool define(uint32_t a, int c) {
        if (rows() >= max_) return false;
        if (table_.size() == table_.capacity()) {
            uint64_t want = std::min<uint64_t>(max_, rows() + rows() / 2 + 64) * cols_;
            table_.reserve(want);
        }
        uint32_t fresh = rows();
        parent_.push_back(fresh);
        table_.insert(table_.end(), cols_, UNDEF);
        at(a, c) = fresh;
        at(fresh, inv_col(c)) = a;
        ++live_;
        ++stats_.cosets_defined;
        return true;
    }

    void merge(uint32_t a, uint32_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --live_;
        ++stats_.coincidences;
        queue_.push_back(b);
    }

    void drain() {
        while (!queue_.empty()) {
            uint32_t d = queue_.front();
            queue_.pop_front();
            for (int c = 0; c < cols_; ++c) {
                uint32_t e = at(d, c);
                if (e == UNDEF) continue;
                at(d, c) = UNDEF;
                if (at(e, inv_col(c)) == d) at(e, inv_col(c)) = UNDEF;
                uint32_t a1 = rep(d), e1 = rep(e);
                if (at(a1, c) != UNDEF) {
                    merge(rep(at(a1, c)), e1);
                } else if (at(e1, inv_col(c)) != UNDEF) {
                    merge(rep(at(e1, inv_col(c))), a1);
                } else {
                    at(a1, c) = e1;
                    at(e1, inv_col(c)) = a1;
                }
            }
        }
    }

    /// Scan relator w at coset a, filling gaps with new cosets. Restarts from
    /// the top after each fill or coincidence so stale indices never leak.
    /// Returns false only when a definition is needed but the table is full.
    bool scan_and_fill(uint32_t a, const std::vector<int>& w) {
        for (;;) {
            uint32_t f = rep(a);
            uint32_t b = f;
            size_t i = 0, j = w.size();
            while (i < j && resolve(f, w[i]) != UNDEF) { f = at(f, w[i]); ++i; }
            if (i == j) {
                if (f != b) { merge(f, b); drain(); }
                return true;
            }
            while (j > i && resolve(b, inv_col(w[j - 1])) != UNDEF) {
                b = at(b, inv_col(w[j - 1]));
                --j;
            }
            if (j == i) {  // scans met at the same position: the cosets coincide
                merge(f, b);
                drain();
                return true;
            }
            if (j == i + 1) {  // single gap: deduction
                at(f, w[i]) = b;
                at(b, inv_col(w[i])) = f;
                return true;
            }
            if (!define(f, w[i])) return false;
        }
    }

    /// Scan without filling; deductions and coincidences only.
    void scan_closes(uint32_t a, const std::vector<int>& w) {
        uint32_t f = rep(a);
        uint32_t b = f;
        size_t i = 0, j = w.size();
        while (i < j && resolve(f, w[i]) != UNDEF) { f = at(f, w[i]); ++i; }
        if (i == j) {
            if (f != b) { merge(f, b); drain(); }
            return;
        }
        while (j > i && resolve(b, inv_col(w[j - 1])) != UNDEF) {
            b = at(b, inv_col(w[j - 1]));
            --j;
        }
        if (j == i) { merge(f, b); drain(); return; }
        if (j == i + 1) {
            at(f, w[i]) = b;
            at(b, inv_col(w[i])) = f;
        }
    }

    bool process_row(uint32_t alpha) {
        for (const auto& r : relators_) {
            if (dead(alpha)) return true;  // merged away; nothing left to do here
            if (!scan_and_fill(alpha, r)) return false;
            drain();
        }
        if (!dead(alpha)) {
            for (int c = 0; c < cols_; ++c) {
                if (dead(alpha)) break;
                if (resolve(alpha, c) == UNDEF && !define(alpha, c)) return false;
            }
        }
        return true;
    }

    bool lookahead_and_compact(uint32_t& alpha) {
        ++stats_.lookaheads;
        for (uint32_t a = 0; a < rows(); ++a) {
            if (dead(a)) continue;
            for (const auto& r : relators_) {
                scan_closes(a, r);
                if (dead(a)) break;
            }
        }
        drain();
        if (live_ == rows()) return false;  // nothing reclaimed: genuine overflow

        // renumber live cosets, preserving order
        std::vector<uint32_t> remap(rows(), UNDEF);
        uint32_t next = 0;
        for (uint32_t a = 0; a < rows(); ++a)
            if (!dead(a)) remap[a] = next++;
        std::vector<uint32_t> nt(uint64_t(next) * cols_, UNDEF);
        for (uint32_t a = 0; a < rows(); ++a) {
            if (dead(a)) continue;
            for (int c = 0; c < cols_; ++c) {
                uint32_t e = resolve(a, c);
                if (e != UNDEF) nt[uint64_t(remap[a]) * cols_ + c] = remap[e];
            }
        }
        uint32_t new_alpha = 0;
        for (uint32_t a = 0; a < alpha && a < rows(); ++a)
            if (!dead(a)) ++new_alpha;
        table_ = std::move(nt);
        parent_.resize(next);
        for (uint32_t a = 0; a < next; ++a) parent_[a] = a;
        live_ = next;
        alpha = new_alpha;
        return true;
    }

    bool certified() {
        for (uint32_t a = 0; a < rows(); ++a) {
            if (dead(a)) continue;
            for (int c = 0; c < cols_; ++c)
                if (resolve(a, c) == UNDEF) return false;
            for (const auto& r : relators_) {
                uint32_t f = a;
                for (int c : r) {
                    f = resolve(f, c);
                    if (f == UNDEF) return false;
                }
                if (f != a) return false;
            }
        }
        return true;
    }

    CosetResult overflow() const {
        CosetResult res;
        res.outcome = CosetResult::Outcome::Overflow;
        res.limit = max_;
        res.stats = stats_;
        return res;
    }
};

inline CosetResult enumerate(const CyclicPresentation& p, const std::vector<Word>& subgroup,
                             uint32_t max_cosets) {
    return CosetEnumerator(p, max_cosets).run(subgroup);
}

/// Order of G_n(m,k) by enumeration over the trivial subgroup; nullopt when
/// the table overflows.
inline std::optional<uint64_t> group_order(int n, int m, int k, uint32_t max_cosets = 1000000) {
    CosetResult r = enumerate(fib_presentation(n, m, k), {}, max_cosets);
    if (!r.closed()) return std::nullopt;
    return r.order;
}

}  // namespace fibtype
