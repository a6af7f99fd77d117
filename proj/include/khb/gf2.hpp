#pragma once

// Bit-packed linear algebra over GF(2): rank/kernel/image via word-parallel
// row reduction, plus subquotients (Z/B) and maps induced on them.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace khb {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v = true) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(int i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    GF2Vector& operator^=(const GF2Vector& o) {
        for (size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    bool is_zero() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    int popcount() const {
        int c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    // index of lowest set bit, -1 if zero
    int first_set() const {
        for (size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return int(w) * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    bool operator==(const GF2Vector& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }

    const std::vector<uint64_t>& words() const { return words_; }

private:
    friend class GF2Matrix;
    int size_ = 0;
    std::vector<uint64_t> words_;
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
          data_(size_t(rows) * wpr_, 0) {}

    static GF2Matrix identity(int n) {
        GF2Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    static GF2Matrix from_triplets(int rows, int cols,
                                   const std::vector<std::pair<int, int>>& entries) {
        GF2Matrix m(rows, cols);
        for (auto [r, c] : entries) m.flip(r, c);  // repeated entries cancel mod 2
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const {
        return (data_[size_t(r) * wpr_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(int r, int c, bool v = true) {
        uint64_t m = uint64_t(1) << (c & 63);
        uint64_t& w = data_[size_t(r) * wpr_ + (c >> 6)];
        if (v) w |= m; else w &= ~m;
    }
    void flip(int r, int c) {
        data_[size_t(r) * wpr_ + (c >> 6)] ^= uint64_t(1) << (c & 63);
    }

    GF2Vector row(int r) const {
        GF2Vector v(cols_);
        for (int w = 0; w < wpr_; ++w) v.words_[w] = data_[size_t(r) * wpr_ + w];
        return v;
    }
    void set_row(int r, const GF2Vector& v) {
        for (int w = 0; w < wpr_; ++w) data_[size_t(r) * wpr_ + w] = v.words_[w];
    }
    void xor_row(int dst, int src) {
        uint64_t* d = &data_[size_t(dst) * wpr_];
        const uint64_t* s = &data_[size_t(src) * wpr_];
        for (int w = 0; w < wpr_; ++w) d[w] ^= s[w];
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        uint64_t* pa = &data_[size_t(a) * wpr_];
        uint64_t* pb = &data_[size_t(b) * wpr_];
        for (int w = 0; w < wpr_; ++w) std::swap(pa[w], pb[w]);
    }
    bool row_is_zero(int r) const {
        const uint64_t* p = &data_[size_t(r) * wpr_];
        for (int w = 0; w < wpr_; ++w) if (p[w]) return false;
        return true;
    }

    bool is_zero() const {
        for (uint64_t w : data_) if (w) return false;
        return true;
    }

    bool operator==(const GF2Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    GF2Matrix transpose() const {
        GF2Matrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int w = 0; w < wpr_; ++w) {
                uint64_t bits = data_[size_t(r) * wpr_ + w];
                while (bits) {
                    int c = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    t.set(c, r, true);
                }
            }
        return t;
    }

    // y = M x on column vectors
    GF2Vector apply(const GF2Vector& x) const {
        if (x.size() != cols_)
            throw error("GF2Matrix::apply: size mismatch");
        GF2Vector y(rows_);
        for (int r = 0; r < rows_; ++r) {
            uint64_t acc = 0;
            const uint64_t* p = &data_[size_t(r) * wpr_];
            for (int w = 0; w < wpr_; ++w) acc ^= p[w] & x.words_[w];
            if (std::popcount(acc) & 1) y.set(r, true);
        }
        return y;
    }

    GF2Matrix operator*(const GF2Matrix& o) const {
        if (cols_ != o.rows_)
            throw error("GF2Matrix::operator*: dimension mismatch");
        GF2Matrix out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r) {
            uint64_t* dst = &out.data_[size_t(r) * out.wpr_];
            for (int w = 0; w < wpr_; ++w) {
                uint64_t bits = data_[size_t(r) * wpr_ + w];
                while (bits) {
                    int k = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    const uint64_t* src = &o.data_[size_t(k) * o.wpr_];
                    for (int ww = 0; ww < o.wpr_; ++ww) dst[ww] ^= src[ww];
                }
            }
        }
        return out;
    }

    GF2Matrix operator+(const GF2Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw error("GF2Matrix::operator+: dimension mismatch");
        GF2Matrix out = *this;
        for (size_t w = 0; w < data_.size(); ++w) out.data_[w] ^= o.data_[w];
        return out;
    }

    static GF2Matrix vstack(const GF2Matrix& a, const GF2Matrix& b) {
        if (a.cols_ != b.cols_ && a.rows_ != 0 && b.rows_ != 0)
            throw error("GF2Matrix::vstack: column mismatch");
        int cols = a.rows_ ? a.cols_ : b.cols_;
        GF2Matrix out(a.rows_ + b.rows_, cols);
        for (int r = 0; r < a.rows_; ++r) out.set_row(r, a.row(r));
        for (int r = 0; r < b.rows_; ++r) out.set_row(a.rows_ + r, b.row(r));
        return out;
    }

private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> data_;
};

// Reduced row echelon form with zero rows dropped. Pivoting is leftmost
// column, topmost row, so the result is deterministic for a given row order.
struct Echelon {
    GF2Matrix mat;            // one row per pivot
    std::vector<int> pivots;  // strictly increasing

    int rank() const { return int(pivots.size()); }

    // Reduce v in place against the echelon rows; returns which rows were used.
    std::vector<int> reduce(GF2Vector& v) const {
        std::vector<int> used;
        for (size_t k = 0; k < pivots.size(); ++k)
            if (v.get(pivots[k])) {
                v ^= mat.row(int(k));
                used.push_back(int(k));
            }
        return used;
    }

    bool contains(GF2Vector v) const {
        reduce(v);
        return v.is_zero();
    }
};

inline Echelon rref(const GF2Matrix& m) {
    Echelon e;
    e.mat = GF2Matrix(0, m.cols());
    std::vector<GF2Vector> rows;
    std::vector<int> pivots;
    for (int r = 0; r < m.rows(); ++r) {
        GF2Vector v = m.row(r);
        for (size_t k = 0; k < pivots.size(); ++k)
            if (v.get(pivots[k])) v ^= rows[k];
        int p = v.first_set();
        if (p < 0) continue;
        for (size_t k = 0; k < rows.size(); ++k)
            if (rows[k].get(p)) rows[k] ^= v;
        // keep pivot order increasing
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        rows.insert(rows.begin() + pos, v);
        pivots.insert(pivots.begin() + pos, p);
    }
    e.mat = GF2Matrix(int(rows.size()), m.cols());
    for (size_t k = 0; k < rows.size(); ++k) e.mat.set_row(int(k), rows[k]);
    e.pivots = std::move(pivots);
    return e;
}

inline int rank(const GF2Matrix& m) { return rref(m).rank(); }

// Rows form a basis of the right kernel {v : m v = 0}; rows = cols - rank.
inline GF2Matrix kernel_basis(const GF2Matrix& m) {
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    GF2Matrix k(int(free_cols.size()), m.cols());
    for (size_t i = 0; i < free_cols.size(); ++i) {
        int f = free_cols[i];
        k.set(int(i), f, true);
        for (int r = 0; r < e.rank(); ++r)
            if (e.mat.get(r, f)) k.set(int(i), e.pivots[r], true);
    }
    return k;
}

// Rows span the column space of m; row count = rank.
inline GF2Matrix image_basis(const GF2Matrix& m) {
    return rref(m.transpose()).mat;
}

inline GF2Matrix row_space_basis(const GF2Matrix& m) { return rref(m).mat; }

// A subspace pair B <= Z <= F2^ambient with chosen coset representatives
// extending a basis of B to a basis of Z.
class Subquotient {
public:
    Subquotient() = default;

    int ambient() const { return ambient_; }
    int dim() const { return reps_.rows(); }

    const GF2Matrix& representatives() const { return reps_; }
    GF2Vector rep(int k) const { return reps_.row(k); }

    bool in_numerator(const GF2Vector& v) const { return full_.contains(v); }
    bool in_denominator(const GF2Vector& v) const { return den_.contains(v); }

    const GF2Matrix& numerator_basis() const { return full_.mat; }
    const GF2Matrix& denominator_basis() const { return den_.mat; }

    // Coordinates of v in the quotient basis; throws if v is outside Z.
    GF2Vector coords(const GF2Vector& v) const {
        GF2Vector rem = v;
        GF2Vector c(dim());
        for (size_t k = 0; k < full_.pivots.size(); ++k)
            if (rem.get(full_.pivots[k])) {
                rem ^= full_.mat.row(int(k));
                if (rep_index_[k] >= 0) c.set(rep_index_[k], true);
            }
        if (!rem.is_zero())
            throw error("Subquotient::coords: vector not in numerator space");
        return c;
    }

    friend Subquotient subquotient(const GF2Matrix&, const GF2Matrix&);

private:
    int ambient_ = 0;
    Echelon full_;                // rref of [den; num] = basis of Z
    Echelon den_;                 // rref of den = basis of B
    GF2Matrix reps_;              // quotient representatives (dim x ambient)
    std::vector<int> rep_index_;  // row of full_ -> rep number, -1 for den rows
};

inline Subquotient subquotient(const GF2Matrix& numerator,
                               const GF2Matrix& denominator) {
    int ambient = numerator.cols();
    if (denominator.rows() > 0 && denominator.cols() != ambient)
        throw error("subquotient: ambient dimension mismatch");

    Echelon num_only = rref(numerator);
    for (int r = 0; r < denominator.rows(); ++r)
        if (!num_only.contains(denominator.row(r)))
            throw error("subquotient: denominator row " + std::to_string(r) +
                        " not contained in numerator span");

    Subquotient sq;
    sq.ambient_ = ambient;
    sq.den_ = rref(denominator.rows() ? denominator : GF2Matrix(0, ambient));

    // Extend the denominator echelon to a staircase basis of the numerator by
    // forward reduction only: existing rows are never modified, so rows with
    // denominator pivots stay inside the denominator and coset reps are the
    // inserted rows. (A full rref of the stack would mix numerator rows into
    // denominator rows and break coordinate bookkeeping.)
    std::vector<GF2Vector> rows;
    std::vector<int> pivots;
    std::vector<int> rep_index;
    for (int r = 0; r < sq.den_.mat.rows(); ++r) {
        rows.push_back(sq.den_.mat.row(r));
        pivots.push_back(sq.den_.pivots[r]);
        rep_index.push_back(-1);
    }
    std::vector<GF2Vector> reps;
    for (int r = 0; r < numerator.rows(); ++r) {
        GF2Vector v = numerator.row(r);
        for (size_t k = 0; k < pivots.size(); ++k)
            if (v.get(pivots[k])) v ^= rows[k];
        int p = v.first_set();
        if (p < 0) continue;
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < p) ++pos;
        rows.insert(rows.begin() + pos, v);
        pivots.insert(pivots.begin() + pos, p);
        rep_index.insert(rep_index.begin() + pos, 0);  // renumbered below
        reps.push_back(v);
    }
    // rep numbering follows pivot order for determinism
    reps.clear();
    for (size_t k = 0; k < rows.size(); ++k)
        if (rep_index[k] == 0) {
            rep_index[k] = int(reps.size());
            reps.push_back(rows[k]);
        }

    sq.full_.mat = GF2Matrix(int(rows.size()), ambient);
    for (size_t k = 0; k < rows.size(); ++k) sq.full_.mat.set_row(int(k), rows[k]);
    sq.full_.pivots = std::move(pivots);
    sq.rep_index_ = std::move(rep_index);
    sq.reps_ = GF2Matrix(int(reps.size()), ambient);
    for (size_t k = 0; k < reps.size(); ++k) sq.reps_.set_row(int(k), reps[k]);
    return sq;
}

// Matrix of the map induced by f on quotients, with well-definedness checked:
// f must carry numerator into numerator and denominator into denominator.
inline GF2Matrix induced_map(const GF2Matrix& f, const Subquotient& src,
                             const Subquotient& tgt) {
    if (f.cols() != src.ambient() || f.rows() != tgt.ambient())
        throw error("induced_map: ambient dimension mismatch");
    for (int r = 0; r < src.numerator_basis().rows(); ++r)
        if (!tgt.in_numerator(f.apply(src.numerator_basis().row(r))))
            throw error("induced_map: image of numerator leaves target numerator");
    for (int r = 0; r < src.denominator_basis().rows(); ++r)
        if (!tgt.in_denominator(f.apply(src.denominator_basis().row(r))))
            throw error("induced_map: not well defined on quotient (denominator escapes)");
    GF2Matrix out(tgt.dim(), src.dim());
    for (int k = 0; k < src.dim(); ++k) {
        GF2Vector y = tgt.coords(f.apply(src.rep(k)));
        for (int r = 0; r < tgt.dim(); ++r)
            if (y.get(r)) out.set(r, k, true);
    }
    return out;
}

}  // namespace khb
