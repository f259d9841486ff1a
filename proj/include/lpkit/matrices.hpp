#pragma once

// Dense exact matrices and the matrix route to the tridiagonal diagonals:
// materialize the split-form pair, change to an ordered eigenbasis by exact
// Gaussian elimination, conjugate, and read the diagonal. This is the
// brute-force oracle the formula route is checked against.

#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "parameter_array.hpp"

namespace lpkit {

class ExactMatrix {
public:
    ExactMatrix(const FieldDescriptor& field, int n)
        : field_(field), n_(n), entries_(static_cast<std::size_t>(n) * n, FieldElement::zero(field)) {
        if (n <= 0) throw StructureError("matrix dimension must be positive");
    }

    static ExactMatrix identity(const FieldDescriptor& field, int n) {
        ExactMatrix m(field, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(field);
        return m;
    }

    int size() const { return n_; }
    const FieldDescriptor& field() const { return field_; }

    FieldElement& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    const FieldElement& at(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * n_ + j];
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.n_ == b.n_ && a.field_ == b.field_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.field_ != b.field_ || a.n_ != b.n_)
            throw StructureError("matrix product shape or field mismatch");
        ExactMatrix out(a.field_, a.n_);
        for (int i = 0; i < a.n_; ++i)
            for (int k = 0; k < a.n_; ++k) {
                const FieldElement& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < a.n_; ++j) out.at(i, j) += aik * b.at(k, j);
            }
        return out;
    }

private:
    FieldDescriptor field_;
    int n_;
    std::vector<FieldElement> entries_;
};

/// Solves P X = B exactly by Gauss-Jordan elimination; the pivot is the
/// first nonzero entry scanning top-down. Throws on singular P.
inline ExactMatrix solve_linear(const ExactMatrix& p, const ExactMatrix& b) {
    if (p.field() != b.field() || p.size() != b.size())
        throw StructureError("solve shape or field mismatch");
    const int n = p.size();
    ExactMatrix lhs = p;
    ExactMatrix rhs = b;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (!lhs.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) throw MatrixError("singular matrix in exact solve");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(lhs.at(pivot, j), lhs.at(col, j));
                std::swap(rhs.at(pivot, j), rhs.at(col, j));
            }
        const FieldElement inv = lhs.at(col, col).inverse();
        for (int j = 0; j < n; ++j) {
            lhs.at(col, j) *= inv;
            rhs.at(col, j) *= inv;
        }
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const FieldElement factor = lhs.at(row, col);
            if (factor.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                lhs.at(row, j) -= factor * lhs.at(col, j);
                rhs.at(row, j) -= factor * rhs.at(col, j);
            }
        }
    }
    return rhs;
}

inline ExactMatrix inverse(const ExactMatrix& p) {
    return solve_linear(p, ExactMatrix::identity(p.field(), p.size()));
}

/// P^{-1} M P via one exact solve; conjugate(M, I) = M.
inline ExactMatrix conjugate(const ExactMatrix& m, const ExactMatrix& p) {
    return solve_linear(p, m * p);
}

namespace detail {

// Kernel of M, which must be one-dimensional; returns a spanning vector.
inline std::vector<FieldElement> kernel_vector_1d(const ExactMatrix& m) {
    const int n = m.size();
    ExactMatrix work = m;
    std::vector<int> pivot_col_of_row;
    int pivot_row = 0;
    for (int col = 0; col < n && pivot_row < n; ++col) {
        int found = -1;
        for (int row = pivot_row; row < n; ++row)
            if (!work.at(row, col).is_zero()) {
                found = row;
                break;
            }
        if (found < 0) continue;
        if (found != pivot_row)
            for (int j = 0; j < n; ++j) std::swap(work.at(found, j), work.at(pivot_row, j));
        const FieldElement inv = work.at(pivot_row, col).inverse();
        for (int j = col; j < n; ++j) work.at(pivot_row, j) *= inv;
        for (int row = pivot_row + 1; row < n; ++row) {
            const FieldElement factor = work.at(row, col);
            if (factor.is_zero()) continue;
            for (int j = col; j < n; ++j) work.at(row, j) -= factor * work.at(pivot_row, j);
        }
        pivot_col_of_row.push_back(col);
        ++pivot_row;
    }
    const int kernel_dim = n - static_cast<int>(pivot_col_of_row.size());
    if (kernel_dim != 1)
        throw MatrixError("eigenspace dimension " + std::to_string(kernel_dim) +
                          ", expected exactly 1");
    std::vector<bool> is_pivot_col(static_cast<std::size_t>(n), false);
    for (int c : pivot_col_of_row) is_pivot_col[static_cast<std::size_t>(c)] = true;
    int free_col = 0;
    while (is_pivot_col[static_cast<std::size_t>(free_col)]) ++free_col;

    std::vector<FieldElement> x(static_cast<std::size_t>(n), FieldElement::zero(m.field()));
    x[static_cast<std::size_t>(free_col)] = FieldElement::one(m.field());
    for (int row = static_cast<int>(pivot_col_of_row.size()) - 1; row >= 0; --row) {
        const int pc = pivot_col_of_row[static_cast<std::size_t>(row)];
        FieldElement sum = FieldElement::zero(m.field());
        for (int j = pc + 1; j < n; ++j) sum += work.at(row, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(pc)] = -sum;  // pivot entry is 1 after scaling
    }
    return x;
}

}  // namespace detail

enum class EigvecNormalization { FirstNonzeroUnit, LastNonzeroUnit };

/// Matrix whose column j is the unique eigenvector of M for eigenvalues[j],
/// scaled so its first (or last) nonzero coordinate is 1. The eigenvalues
/// must be distinct and each eigenspace one-dimensional.
inline ExactMatrix eigenbasis_ordered(const ExactMatrix& m,
                                      const std::vector<FieldElement>& eigenvalues,
                                      EigvecNormalization norm = EigvecNormalization::FirstNonzeroUnit) {
    const int n = m.size();
    if (static_cast<int>(eigenvalues.size()) != n)
        throw StructureError("need exactly one eigenvalue per column");
    for (std::size_t i = 0; i < eigenvalues.size(); ++i)
        for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
            if (eigenvalues[i] == eigenvalues[j]) throw MatrixError("repeated eigenvalues");

    ExactMatrix basis(m.field(), n);
    for (int j = 0; j < n; ++j) {
        ExactMatrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= eigenvalues[static_cast<std::size_t>(j)];
        std::vector<FieldElement> v = detail::kernel_vector_1d(shifted);
        int anchor = -1;
        if (norm == EigvecNormalization::FirstNonzeroUnit) {
            for (int i = 0; i < n; ++i)
                if (!v[static_cast<std::size_t>(i)].is_zero()) {
                    anchor = i;
                    break;
                }
        } else {
            for (int i = n - 1; i >= 0; --i)
                if (!v[static_cast<std::size_t>(i)].is_zero()) {
                    anchor = i;
                    break;
                }
        }
        const FieldElement scale = v[static_cast<std::size_t>(anchor)].inverse();
        for (int i = 0; i < n; ++i) basis.at(i, j) = v[static_cast<std::size_t>(i)] * scale;
    }
    return basis;
}

struct TridiagonalProfile {
    std::vector<FieldElement> diag;  // n entries
    std::vector<FieldElement> sub;   // n-1 entries
    std::vector<FieldElement> sup;   // n-1 entries
    bool irreducible = false;        // every sub and sup entry nonzero
};

inline TridiagonalProfile tridiagonal_profile(const ExactMatrix& m) {
    const int n = m.size();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if ((i - j > 1 || j - i > 1) && !m.at(i, j).is_zero())
                throw MatrixError("nonzero entry outside the tridiagonal bands at (" +
                                  std::to_string(i) + ", " + std::to_string(j) + ")");
    TridiagonalProfile out;
    for (int i = 0; i < n; ++i) out.diag.push_back(m.at(i, i));
    for (int i = 1; i < n; ++i) {
        out.sub.push_back(m.at(i, i - 1));
        out.sup.push_back(m.at(i - 1, i));
    }
    out.irreducible = true;
    for (const auto& e : out.sub)
        if (e.is_zero()) out.irreducible = false;
    for (const auto& e : out.sup)
        if (e.is_zero()) out.irreducible = false;
    return out;
}

/// The split-form pair: A lower bidiagonal with diagonal theta and unit
/// subdiagonal, A* upper bidiagonal with diagonal theta* and superdiagonal
/// varphi.
inline std::pair<ExactMatrix, ExactMatrix> build_split_form(const ParameterArray& pa) {
    require_valid(pa);
    const int n = pa.d + 1;
    ExactMatrix a(pa.field, n);
    ExactMatrix a_star(pa.field, n);
    for (int i = 0; i < n; ++i) {
        a.at(i, i) = pa.theta[i];
        a_star.at(i, i) = pa.theta_star[i];
    }
    for (int i = 1; i < n; ++i) {
        a.at(i, i - 1) = FieldElement::one(pa.field);
        a_star.at(i - 1, i) = pa.varphi[i - 1];
    }
    return {std::move(a), std::move(a_star)};
}

struct OracleMatrices {
    ExactMatrix a;            // split form of the first member
    ExactMatrix a_star;       // split form of the second member
    ExactMatrix p_star;       // ordered eigenbasis of a_star
    ExactMatrix t;            // p_star^{-1} a p_star, irreducible tridiagonal
    ExactMatrix p;            // ordered eigenbasis of a
    ExactMatrix t_star;       // p^{-1} a_star p, irreducible tridiagonal
};

namespace detail {

inline std::vector<FieldElement> oracle_diagonal(const ExactMatrix& source,
                                                 const ExactMatrix& other,
                                                 const std::vector<FieldElement>& other_eigs,
                                                 EigvecNormalization norm, ExactMatrix* basis_out,
                                                 ExactMatrix* tri_out) {
    const ExactMatrix basis = eigenbasis_ordered(other, other_eigs, norm);
    const ExactMatrix tri = conjugate(source, basis);
    const TridiagonalProfile profile = tridiagonal_profile(tri);
    if (!profile.irreducible)
        throw MatrixError("conjugated matrix is tridiagonal but not irreducible");
    if (basis_out) *basis_out = basis;
    if (tri_out) *tri_out = tri;
    return profile.diag;
}

}  // namespace detail

/// Full matrix route with all intermediates kept, as emitted by the CLI.
inline OracleMatrices oracle_matrices(const ParameterArray& pa) {
    auto [a, a_star] = build_split_form(pa);
    OracleMatrices out{a, a_star, a, a, a, a};  // placeholders overwritten below
    detail::oracle_diagonal(a, a_star, pa.theta_star, EigvecNormalization::FirstNonzeroUnit,
                            &out.p_star, &out.t);
    detail::oracle_diagonal(a_star, a, pa.theta, EigvecNormalization::FirstNonzeroUnit, &out.p,
                            &out.t_star);
    return out;
}

/// Matrix oracle for the tridiagonal diagonals. Builds the split form,
/// changes to the ordered eigenbasis of the other member, and reads the
/// diagonal of the conjugate, which must be irreducible tridiagonal.
/// With LPKIT_DEBUG_ORACLE=1 the diagonals are recomputed under the other
/// eigenvector normalization, which must not change them.
inline std::pair<std::vector<FieldElement>, std::vector<FieldElement>> oracle_a(
    const ParameterArray& pa) {
    auto [a, a_star] = build_split_form(pa);
    std::vector<FieldElement> diag_a = detail::oracle_diagonal(
        a, a_star, pa.theta_star, EigvecNormalization::FirstNonzeroUnit, nullptr, nullptr);
    std::vector<FieldElement> diag_a_star = detail::oracle_diagonal(
        a_star, a, pa.theta, EigvecNormalization::FirstNonzeroUnit, nullptr, nullptr);

    const char* debug = std::getenv("LPKIT_DEBUG_ORACLE");
    if (debug && std::string(debug) == "1") {
        const auto alt_a = detail::oracle_diagonal(
            a, a_star, pa.theta_star, EigvecNormalization::LastNonzeroUnit, nullptr, nullptr);
        const auto alt_a_star = detail::oracle_diagonal(
            a_star, a, pa.theta, EigvecNormalization::LastNonzeroUnit, nullptr, nullptr);
        if (alt_a != diag_a || alt_a_star != diag_a_star)
            throw TheoremViolation("oracle diagonal depends on eigenvector normalization");
    }
    return {std::move(diag_a), std::move(diag_a_star)};
}

}  // namespace lpkit
