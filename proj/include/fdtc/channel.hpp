// SPDX-License-Identifier: Apache-2.0
//
// fdtc - transmission capacity toolkit for full-duplex MIMO ad-hoc networks
// Copyright (C) 2026 The fdtc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "fdtc/error.hpp"
#include "fdtc/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

namespace fdtc
{

template <typename Scalar>
using CMatrixT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVectorT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using CMatrix = CMatrixT<double>;
using CVector = CVectorT<double>;

/// Antennas per node: N = n_tx + n_rx.
struct AntennaConfig
{
    int n_tx = 1;
    int n_rx = 1;

    int total() const { return n_tx + n_rx; }
    bool transmit_heavy() const { return n_tx > n_rx; }
    void validate() const
    {
        if (n_tx < 1 || n_rx < 1)
            throw domain_error("AntennaConfig: need at least one transmit and one receive antenna");
    }
};

/// Self-interference channel at one node: actual = estimated + error, exactly.
struct SiChannel
{
    CMatrix estimated;
    CMatrix error;
    CMatrix actual;
};

/// Channels seen by the typical pair (node i receives from its partner j).
struct ChannelSet
{
    CMatrix desired;     ///< H_{i,j}: partner -> typical receiver, n_rx x n_tx
    CMatrix reverse;     ///< H_{j,i}: typical node -> partner, used for the typical node's precoder
    SiChannel si_typical;
    SiChannel si_partner;
    std::vector<CMatrix> from_a; ///< H_{i,a_k} for the k-th interferer (0-based); empty in effective form
    std::vector<CMatrix> from_b; ///< H_{i,b_k}
    double sigma2_si = 0.0;
};

// ---- Random draws ------------------------------------------------------------

/// i.i.d. CN(0, variance) entries.
template <typename Scalar = double>
CMatrixT<Scalar> draw_complex_gaussian(Eigen::Index rows, Eigen::Index cols, Scalar variance, Rng &rng)
{
    if (rows < 0 || cols < 0)
        throw domain_error("draw_complex_gaussian: negative dimension");
    std::normal_distribution<Scalar> normal(Scalar(0), std::sqrt(variance / Scalar(2)));
    CMatrixT<Scalar> out(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c)
        for (Eigen::Index r = 0; r < rows; ++r)
        {
            const Scalar re = normal(rng);
            const Scalar im = normal(rng);
            out(r, c) = {re, im};
        }
    return out;
}

/// Rayleigh fading matrix with i.i.d. CN(0, 1) entries.
template <typename Scalar = double>
CMatrixT<Scalar> draw_rayleigh(Eigen::Index rows, Eigen::Index cols, Rng &rng)
{
    if (rows < 1 || cols < 1)
        throw domain_error("draw_rayleigh: dimensions must be positive");
    return draw_complex_gaussian<Scalar>(rows, cols, Scalar(1), rng);
}

/// CN(0, I) vector.
inline CVector draw_rayleigh_vector(Eigen::Index size, Rng &rng)
{
    return draw_complex_gaussian<double>(size, 1, 1.0, rng);
}

/// Estimated SI channel with CN(0,1) entries and an independent CN(0, sigma2_si) error.
SiChannel draw_si_channel(const AntennaConfig &config, double sigma2_si, Rng &rng);

/// All channels of the typical pair; interferer matrices are drawn only when
/// `interferers` is non-zero.
ChannelSet draw_channel_set(const AntennaConfig &config, double sigma2_si, std::size_t interferers,
                            Rng &rng);

// ---- Linear-algebra kernels -------------------------------------------------

/// Relative threshold below which singular values count as zero.
inline constexpr double kRankTolerance = 1e-12;

/// Orthonormal basis of the right null space of A (n x d, d = n - rank(A)).
/// A matrix with zero rows has the whole space as its null space.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
null_space(const Eigen::MatrixBase<Derived> &A)
{
    using Mat = Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
    const Eigen::Index n = A.cols();
    if (A.rows() == 0 || n == 0)
        return Mat::Identity(n, n);

    Eigen::JacobiSVD<Mat> svd(A.eval(), Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    const Real smax = sv.size() > 0 ? sv(0) : Real(0);
    const Real threshold = Real(std::max(A.rows(), n)) * smax * Real(kRankTolerance);
    Eigen::Index rank = 0;
    if (smax > Real(0))
        for (Eigen::Index k = 0; k < sv.size(); ++k)
            rank += sv(k) > threshold ? 1 : 0;
    return svd.matrixV().rightCols(n - rank);
}

template <typename Scalar>
struct SingularTriple
{
    typename Eigen::NumTraits<Scalar>::Real sigma = 0;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> u;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> v;
};

/// Rotate a vector so that its first non-negligible component is real and positive.
/// Returns the applied unit phase factor.
template <typename Derived>
typename Derived::Scalar normalize_phase(Eigen::MatrixBase<Derived> &v)
{
    using Scalar = typename Derived::Scalar;
    using Real = typename Eigen::NumTraits<Scalar>::Real;
    const Real cut = v.norm() * Real(1e-12);
    for (Eigen::Index k = 0; k < v.size(); ++k)
    {
        const Real mag = std::abs(v(k));
        if (mag > cut)
        {
            const Scalar phase = std::conj(v(k)) / mag;
            v *= phase;
            return phase;
        }
    }
    return Scalar(1);
}

/// Largest singular value with its unit singular vectors: A v = sigma u.
/// Throws degenerate_error for a zero matrix.
template <typename Derived>
SingularTriple<typename Derived::Scalar> dominant_singular_triple(const Eigen::MatrixBase<Derived> &A)
{
    using Scalar = typename Derived::Scalar;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    if (A.size() == 0)
        throw degenerate_error("dominant_singular_triple: empty matrix");
    Eigen::JacobiSVD<Mat> svd(A.eval(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    SingularTriple<Scalar> out;
    out.sigma = svd.singularValues()(0);
    if (!(out.sigma > 0))
        throw degenerate_error("dominant_singular_triple: zero matrix");
    out.v = svd.matrixV().col(0);
    normalize_phase(out.v);
    out.u = (A * out.v) / out.sigma;
    out.u.normalize();
    return out;
}

/// Largest eigenvalue of A A^H.
template <typename Derived>
double top_gram_eigenvalue(const Eigen::MatrixBase<Derived> &A)
{
    const double sigma = dominant_singular_triple(A).sigma;
    return sigma * sigma;
}

} // namespace fdtc
