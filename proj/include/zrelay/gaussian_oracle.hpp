// SPDX-License-Identifier: Apache-2.0
//
// zrelay: rate regions of the Gaussian Z-interference channel with a
// unidirectional digital relay link.
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

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace zrelay {

class SingularCovarianceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/**
 * Jointly Gaussian scalar system built from mutually independent zero-mean
 * sources (inputs, noises, quantization noise) and named observables that are
 * real linear combinations of them. Every named variable is a row of a linear
 * map L from the sources, so the joint covariance of any set is L D L^T with D
 * the diagonal of source variances.
 *
 * Information measures are computed from conditional covariances obtained by
 * Schur complements over the conditioning set, never by inverting the full
 * joint covariance. The default scalar is long double: the systems are tiny
 * (<= 8 variables) and SNR/INR can span ten orders of magnitude.
 */
template <typename Scalar = long double>
class BasicGaussianSystem
{
public:
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Names = std::vector<std::string>;
    using Terms = std::vector<std::pair<std::string, double>>;

    /// Relative pivot threshold below which a covariance counts as singular.
    static constexpr Scalar kSingularTol = Scalar(1e-12);

    void add_source(const std::string& name, double variance)
    {
        if (!(variance >= 0.0) || !std::isfinite(variance))
            throw std::invalid_argument("GaussianSystem: source variance must be finite and >= 0: " + name);
        declare(name);
        variances_.push_back(Scalar(variance));
        for (auto& [_, row] : rows_) {
            row.conservativeResize(static_cast<Eigen::Index>(variances_.size()));
            row(row.size() - 1) = Scalar(0);
        }
        Vector e = Vector::Zero(static_cast<Eigen::Index>(variances_.size()));
        e(e.size() - 1) = Scalar(1);
        rows_[name] = e;
    }

    /// name = sum coeff * var, where var is a source or an earlier observable.
    void add_observable(const std::string& name, const Terms& terms)
    {
        Vector row = Vector::Zero(static_cast<Eigen::Index>(variances_.size()));
        for (const auto& [var, coeff] : terms)
            row += Scalar(coeff) * rows_.at(checked(var));
        declare(name);
        rows_[name] = row;
    }

    [[nodiscard]] bool has(const std::string& name) const { return rows_.contains(name); }

    [[nodiscard]] Matrix covariance(const Names& vars) const
    {
        const Matrix l = loading(vars);
        return l * variances_as_diagonal() * l.transpose();
    }

    /// Cov(S | C) by Schur complement: Sigma_SS - Sigma_SC Sigma_CC^+ Sigma_CS.
    [[nodiscard]] Matrix conditional_covariance(const Names& set, const Names& given) const
    {
        const Matrix s = covariance(set);
        if (given.empty())
            return s;
        const Matrix ls = loading(set);
        const Matrix lc = loading(given);
        const Matrix d = variances_as_diagonal();
        const Matrix scc = lc * d * lc.transpose();
        const Matrix ssc = ls * d * lc.transpose();
        return s - ssc * solve_psd(scc, ssc.transpose());
    }

    [[nodiscard]] Scalar conditional_variance(const std::string& target, const Names& given) const
    {
        return conditional_covariance({target}, given)(0, 0);
    }

    /// Differential entropy h(A | C) in bits.
    [[nodiscard]] double entropy_bits(const Names& a, const Names& given = {}) const
    {
        const Matrix c = conditional_covariance(a, given);
        using std::log;
        const Scalar n = Scalar(a.size());
        return double((n * log(Scalar(2) * std::numbers::pi_v<Scalar> * std::numbers::e_v<Scalar>) +
                       logdet(c, a)) /
                      (Scalar(2) * log(Scalar(2))));
    }

    /// I(A; B | C) in bits.
    [[nodiscard]] double mutual_information(const Names& a, const Names& b, const Names& given = {}) const
    {
        if (a.empty() || b.empty())
            return 0.0;
        Names ab = a;
        ab.insert(ab.end(), b.begin(), b.end());
        const Matrix joint = conditional_covariance(ab, given);
        const auto na = static_cast<Eigen::Index>(a.size());
        const auto nb = static_cast<Eigen::Index>(b.size());
        const Scalar la = logdet(joint.topLeftCorner(na, na), a);
        const Scalar lb = logdet(joint.bottomRightCorner(nb, nb), b);
        const Scalar lab = logdet(joint, ab);
        using std::log;
        const Scalar bits = (la + lb - lab) / (Scalar(2) * log(Scalar(2)));
        return double(bits);
    }

private:
    void declare(const std::string& name)
    {
        if (rows_.contains(name))
            throw std::invalid_argument("GaussianSystem: duplicate variable " + name);
    }

    const std::string& checked(const std::string& name) const
    {
        if (!rows_.contains(name))
            throw std::invalid_argument("GaussianSystem: undeclared variable " + name);
        return name;
    }

    Matrix variances_as_diagonal() const
    {
        Vector v(static_cast<Eigen::Index>(variances_.size()));
        for (std::size_t i = 0; i < variances_.size(); ++i)
            v(static_cast<Eigen::Index>(i)) = variances_[i];
        return v.asDiagonal();
    }

    Matrix loading(const Names& vars) const
    {
        Matrix l(static_cast<Eigen::Index>(vars.size()), static_cast<Eigen::Index>(variances_.size()));
        for (std::size_t i = 0; i < vars.size(); ++i)
            l.row(static_cast<Eigen::Index>(i)) = rows_.at(checked(vars[i])).transpose();
        return l;
    }

    static std::string describe(const Names& vars)
    {
        std::string s = "{";
        for (std::size_t i = 0; i < vars.size(); ++i)
            s += (i ? "," : "") + vars[i];
        return s + "}";
    }

    // Sigma^+ * rhs; a rank-deficient conditioning set (e.g. a repeated
    // variable) falls back to the eigen pseudo-inverse.
    static Matrix solve_psd(const Matrix& sigma, const Matrix& rhs)
    {
        Eigen::LDLT<Matrix> ldlt(sigma);
        const Scalar scale = sigma.diagonal().cwiseAbs().maxCoeff();
        if (ldlt.info() == Eigen::Success && ldlt.isPositive() &&
            ldlt.vectorD().minCoeff() > kSingularTol * scale)
            return ldlt.solve(rhs);
        Eigen::SelfAdjointEigenSolver<Matrix> eig(sigma);
        const Vector& ev = eig.eigenvalues();
        const Scalar cut = kSingularTol * std::max(ev.cwiseAbs().maxCoeff(), Scalar(1e-300));
        Vector inv(ev.size());
        for (Eigen::Index i = 0; i < ev.size(); ++i)
            inv(i) = ev(i) > cut ? Scalar(1) / ev(i) : Scalar(0);
        return eig.eigenvectors() * inv.asDiagonal() * eig.eigenvectors().transpose() * rhs;
    }

    static Scalar logdet(const Matrix& sigma, const Names& vars)
    {
        Eigen::LDLT<Matrix> ldlt(sigma);
        const Scalar scale = sigma.diagonal().cwiseAbs().maxCoeff();
        if (ldlt.info() != Eigen::Success || !(scale > Scalar(0)) ||
            ldlt.vectorD().minCoeff() <= kSingularTol * scale)
            throw SingularCovarianceError("singular conditional covariance for " + describe(vars));
        using std::log;
        Scalar s = 0;
        for (Eigen::Index i = 0; i < ldlt.vectorD().size(); ++i)
            s += log(ldlt.vectorD()(i));
        return s;
    }

    std::vector<Scalar> variances_;
    std::map<std::string, Vector> rows_;
};

using GaussianSystem = BasicGaussianSystem<long double>;

} // namespace zrelay
