#pragma once

// Closed-form parameter-array generators, one per classification case, plus
// the two d <= 2 constructions. Every generator re-validates its output and
// fails loudly: the closed forms describe existing Leonard pairs, but an
// arbitrary scalar choice can collide eigenvalues or zero a split entry.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "parameter_array.hpp"

namespace lpkit {

namespace detail {

inline FieldElement embed(const FieldDescriptor& f, std::int64_t n) {
    return FieldElement::from_integer(f, n);
}

inline void check_field(const FieldDescriptor& f, std::initializer_list<const FieldElement*> xs) {
    for (const FieldElement* x : xs)
        if (x->descriptor() != f)
            throw FieldError("family data mixes fields: " + x->descriptor().to_string() + " vs " +
                             f.to_string());
}

inline ParameterArray finish(ParameterArray pa, const char* family) {
    const ValidationReport report = validate(pa);
    if (!report.valid()) {
        std::string msg = std::string(family) + " data does not yield a valid array:";
        for (const auto& f : report.failures) msg += std::string(" [") + to_string(f.condition) + " " + f.detail + "]";
        throw GenerationError(msg);
    }
    return pa;
}

}  // namespace detail

struct CaseIData {
    int d;
    FieldElement q, eta, mu, h, eta_star, mu_star, h_star, tau;
};

// theta_i = eta + mu q^i + h q^{d-i}
// varphi_i = (q^i - 1)(q^{d-i+1} - 1)(tau - mu mu* q^{i-1} - h h* q^{d-i})
// phi_i    = (q^i - 1)(q^{d-i+1} - 1)(tau - h mu* q^{i-1} - mu h* q^{d-i})
inline ParameterArray generate_case_I(const CaseIData& data) {
    const FieldDescriptor f = data.q.descriptor();
    detail::check_field(f, {&data.eta, &data.mu, &data.h, &data.eta_star, &data.mu_star,
                            &data.h_star, &data.tau});
    if (data.d < 3) throw GenerationError("case I requires d >= 3");
    if (data.q.is_zero()) throw GenerationError("case I requires q != 0");
    const FieldElement one = FieldElement::one(f);
    for (int i = 1; i <= data.d; ++i)
        if (data.q.pow(i) == one)
            throw GenerationError("case I requires q^i != 1 for 1 <= i <= d; fails at i = " +
                                  std::to_string(i));

    ParameterArray pa{f, data.d, {}, {}, {}, {}};
    for (int i = 0; i <= data.d; ++i) {
        const FieldElement qi = data.q.pow(i);
        const FieldElement qdi = data.q.pow(data.d - i);
        pa.theta.push_back(data.eta + data.mu * qi + data.h * qdi);
        pa.theta_star.push_back(data.eta_star + data.mu_star * qi + data.h_star * qdi);
    }
    for (int i = 1; i <= data.d; ++i) {
        const FieldElement lead = (data.q.pow(i) - one) * (data.q.pow(data.d - i + 1) - one);
        const FieldElement qim1 = data.q.pow(i - 1);
        const FieldElement qdi = data.q.pow(data.d - i);
        pa.varphi.push_back(lead *
                            (data.tau - data.mu * data.mu_star * qim1 - data.h * data.h_star * qdi));
        pa.phi.push_back(lead *
                         (data.tau - data.h * data.mu_star * qim1 - data.mu * data.h_star * qdi));
    }
    return detail::finish(std::move(pa), "case I");
}

struct CaseIIData {
    int d;
    FieldElement eta, mu, h, eta_star, mu_star, h_star, tau;
};

// theta_i = eta + mu(i - d/2) + h i(d-i); needs characteristic 0 or > d
inline ParameterArray generate_case_II(const CaseIIData& data) {
    const FieldDescriptor f = data.eta.descriptor();
    detail::check_field(f, {&data.mu, &data.h, &data.eta_star, &data.mu_star, &data.h_star,
                            &data.tau});
    if (data.d < 3) throw GenerationError("case II requires d >= 3");
    const std::int64_t c = f.characteristic();
    if (c == 2) throw GenerationError("case II requires characteristic != 2");
    if (c != 0 && c <= data.d)
        throw GenerationError("case II requires characteristic 0 or > d, got " + std::to_string(c));
    if (data.h.is_zero() && data.mu.is_zero())
        throw GenerationError("case II requires mu != 0 when h = 0");
    if (data.h_star.is_zero() && data.mu_star.is_zero())
        throw GenerationError("case II requires mu* != 0 when h* = 0");

    const FieldElement two = detail::embed(f, 2);
    const FieldElement half_d = detail::embed(f, data.d) / two;
    const FieldElement half_d1 = detail::embed(f, data.d + 1) / two;
    const FieldElement half_mm = data.mu * data.mu_star / two;

    ParameterArray pa{f, data.d, {}, {}, {}, {}};
    for (int i = 0; i <= data.d; ++i) {
        const FieldElement fi = detail::embed(f, i);
        const FieldElement span = fi * detail::embed(f, data.d - i);
        pa.theta.push_back(data.eta + data.mu * (fi - half_d) + data.h * span);
        pa.theta_star.push_back(data.eta_star + data.mu_star * (fi - half_d) + data.h_star * span);
    }
    for (int i = 1; i <= data.d; ++i) {
        const FieldElement fi = detail::embed(f, i);
        const FieldElement lead = fi * detail::embed(f, data.d - i + 1);
        const FieldElement centered = fi - half_d1;
        const FieldElement corner = data.h * data.h_star * detail::embed(f, i - 1) *
                                    detail::embed(f, data.d - i);
        pa.varphi.push_back(lead * (data.tau - half_mm +
                                    (data.h * data.mu_star + data.mu * data.h_star) * centered +
                                    corner));
        pa.phi.push_back(lead * (data.tau + half_mm +
                                 (data.h * data.mu_star - data.mu * data.h_star) * centered +
                                 corner));
    }
    return detail::finish(std::move(pa), "case II");
}

struct CaseIIIData {
    int d;  // even
    FieldElement eta, h, s, eta_star, h_star, s_star, tau;
};

struct CaseIVData {
    int d;  // odd
    FieldElement eta, h, s, eta_star, h_star, s_star, tau;
};

namespace detail {

// The parity-alternating eigenvalues shared by the two q = -1 cases:
// theta_i = eta + s + h(i - d/2) for even i, eta - s - h(i - d/2) for odd i.
inline void fill_alternating_eigenvalues(ParameterArray& pa, const FieldElement& eta,
                                         const FieldElement& s, const FieldElement& h,
                                         const FieldElement& eta_star, const FieldElement& s_star,
                                         const FieldElement& h_star) {
    const FieldDescriptor f = pa.field;
    const FieldElement half_d = embed(f, pa.d) / embed(f, 2);
    for (int i = 0; i <= pa.d; ++i) {
        const FieldElement offset = embed(f, i) - half_d;
        if (i % 2 == 0) {
            pa.theta.push_back(eta + s + h * offset);
            pa.theta_star.push_back(eta_star + s_star + h_star * offset);
        } else {
            pa.theta.push_back(eta - s - h * offset);
            pa.theta_star.push_back(eta_star - s_star - h_star * offset);
        }
    }
}

}  // namespace detail

inline ParameterArray generate_case_III(const CaseIIIData& data) {
    const FieldDescriptor f = data.eta.descriptor();
    detail::check_field(f, {&data.h, &data.s, &data.eta_star, &data.h_star, &data.s_star,
                            &data.tau});
    if (data.d < 3 || data.d % 2 != 0) throw GenerationError("case III requires even d >= 4");
    if (f.characteristic() == 2) throw GenerationError("case III requires characteristic != 2");
    if (data.h.is_zero() || data.h_star.is_zero())
        throw GenerationError("case III requires h != 0 and h* != 0");

    ParameterArray pa{f, data.d, {}, {}, {}, {}};
    detail::fill_alternating_eigenvalues(pa, data.eta, data.s, data.h, data.eta_star, data.s_star,
                                         data.h_star);
    const FieldElement half_d1 = detail::embed(f, data.d + 1) / detail::embed(f, 2);
    const FieldElement sh_star = data.s * data.h_star;
    const FieldElement s_star_h = data.s_star * data.h;
    const FieldElement hh_star = data.h * data.h_star;
    for (int i = 1; i <= data.d; ++i) {
        const FieldElement centered = detail::embed(f, i) - half_d1;
        if (i % 2 == 0) {
            const FieldElement lead = detail::embed(f, i);
            pa.varphi.push_back(lead * (data.tau - sh_star - s_star_h - hh_star * centered));
            pa.phi.push_back(lead * (data.tau - sh_star + s_star_h + hh_star * centered));
        } else {
            const FieldElement lead = detail::embed(f, data.d - i + 1);
            pa.varphi.push_back(lead * (data.tau + sh_star + s_star_h + hh_star * centered));
            pa.phi.push_back(lead * (data.tau + sh_star - s_star_h - hh_star * centered));
        }
    }
    return detail::finish(std::move(pa), "case III");
}

inline ParameterArray generate_case_IV(const CaseIVData& data) {
    const FieldDescriptor f = data.eta.descriptor();
    detail::check_field(f, {&data.h, &data.s, &data.eta_star, &data.h_star, &data.s_star,
                            &data.tau});
    if (data.d < 3 || data.d % 2 == 0) throw GenerationError("case IV requires odd d >= 3");
    if (f.characteristic() == 2) throw GenerationError("case IV requires characteristic != 2");
    if (data.h.is_zero() || data.h_star.is_zero())
        throw GenerationError("case IV requires h h* != 0");

    ParameterArray pa{f, data.d, {}, {}, {}, {}};
    detail::fill_alternating_eigenvalues(pa, data.eta, data.s, data.h, data.eta_star, data.s_star,
                                         data.h_star);
    const FieldElement two = detail::embed(f, 2);
    const FieldElement half_d1 = detail::embed(f, data.d + 1) / two;
    const FieldElement hh_star = data.h * data.h_star;
    const FieldElement ss_star2 = two * data.s * data.s_star;
    const FieldElement hs_sum = data.h * data.s_star + data.h_star * data.s;
    const FieldElement hs_diff = data.h * data.s_star - data.h_star * data.s;
    for (int i = 1; i <= data.d; ++i) {
        const FieldElement lead = detail::embed(f, i) * detail::embed(f, data.d - i + 1);
        if (i % 2 == 0) {
            pa.varphi.push_back(hh_star * lead);
            pa.phi.push_back(hh_star * lead);
        } else {
            const FieldElement centered = detail::embed(f, i) - half_d1;
            pa.varphi.push_back(data.tau - ss_star2 + lead * hh_star - two * hs_sum * centered);
            pa.phi.push_back(data.tau + ss_star2 + lead * hh_star - two * hs_diff * centered);
        }
    }
    return detail::finish(std::move(pa), "case IV");
}

struct CaseVData {
    FieldElement theta0, theta0_star, h, s, h_star, s_star, r;
};

// Characteristic-2 case; d is forced to 3. The table is anchored at theta_0:
// theta = (t0, t0 + h(s+1), t0 + h, t0 + hs) and symmetrically for theta*;
// varphi = (h h* r, h h*, h h*(r+s+s*)),
// phi = (h h*(r+s(1+s*)), h h*, h h*(r+s*(1+s))).
inline ParameterArray generate_case_V(const CaseVData& data) {
    const FieldDescriptor f = data.theta0.descriptor();
    detail::check_field(f, {&data.theta0_star, &data.h, &data.s, &data.h_star, &data.s_star,
                            &data.r});
    if (f.characteristic() != 2) throw GenerationError("case V requires characteristic 2");
    if (f.size() && *f.size() < 4)
        throw GenerationError("case V requires a field with at least 4 elements");
    const FieldElement one = FieldElement::one(f);
    if (data.h.is_zero() || data.h_star.is_zero() || data.s.is_zero() || data.s_star.is_zero())
        throw GenerationError("case V requires h, h*, s, s* nonzero");
    if (data.s == one || data.s_star == one) throw GenerationError("case V requires s != 1 and s* != 1");

    const FieldElement hh_star = data.h * data.h_star;
    ParameterArray pa{f, 3, {}, {}, {}, {}};
    pa.theta = {data.theta0, data.theta0 + data.h * (data.s + one), data.theta0 + data.h,
                data.theta0 + data.h * data.s};
    pa.theta_star = {data.theta0_star, data.theta0_star + data.h_star * (data.s_star + one),
                     data.theta0_star + data.h_star, data.theta0_star + data.h_star * data.s_star};
    pa.varphi = {hh_star * data.r, hh_star, hh_star * (data.r + data.s + data.s_star)};
    pa.phi = {hh_star * (data.r + data.s * (one + data.s_star)), hh_star,
              hh_star * (data.r + data.s_star * (one + data.s))};
    return detail::finish(std::move(pa), "case V");
}

struct D2CounterData {
    std::array<FieldElement, 3> theta, theta_star;
};

// The d = 2 balanced construction: valid for any distinct eigenvalues, and
// balanced with a = (theta_1, theta_0 - theta_1 + theta_2, theta_1).
inline ParameterArray generate_d2_counterexample(const D2CounterData& data) {
    const FieldDescriptor f = data.theta[0].descriptor();
    detail::check_field(f, {&data.theta[1], &data.theta[2], &data.theta_star[0],
                            &data.theta_star[1], &data.theta_star[2]});
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (data.theta[i] == data.theta[j] || data.theta_star[i] == data.theta_star[j])
                throw GenerationError("d2 construction requires distinct eigenvalues");

    const FieldElement d01 = data.theta[0] - data.theta[1];
    const FieldElement d12 = data.theta[1] - data.theta[2];
    const FieldElement e01 = data.theta_star[0] - data.theta_star[1];
    const FieldElement e12 = data.theta_star[1] - data.theta_star[2];
    ParameterArray pa{f, 2,
                      {data.theta[0], data.theta[1], data.theta[2]},
                      {data.theta_star[0], data.theta_star[1], data.theta_star[2]},
                      {-(d01 * e01), -(d12 * e12)},
                      {d12 * e01, d01 * e12}};
    return detail::finish(std::move(pa), "d2 counterexample");
}

inline ParameterArray generate_d2_counterexample(const std::array<FieldElement, 3>& theta,
                                                 const std::array<FieldElement, 3>& theta_star) {
    return generate_d2_counterexample(D2CounterData{theta, theta_star});
}

struct CaseZeroD1Data {
    std::array<FieldElement, 2> theta, theta_star;
    FieldElement varphi1;
};

// d = 1: phi_1 is forced to varphi_1 + (ts_1 - ts_0)(t_1 - t_0) and must be
// nonzero.
inline ParameterArray generate_case0_d1(const CaseZeroD1Data& data) {
    const FieldDescriptor f = data.theta[0].descriptor();
    detail::check_field(f, {&data.theta[1], &data.theta_star[0], &data.theta_star[1],
                            &data.varphi1});
    if (data.theta[0] == data.theta[1] || data.theta_star[0] == data.theta_star[1])
        throw GenerationError("d1 construction requires distinct eigenvalues");
    if (data.varphi1.is_zero()) throw GenerationError("d1 construction requires varphi_1 != 0");
    const FieldElement phi1 = data.varphi1 + (data.theta_star[1] - data.theta_star[0]) *
                                                 (data.theta[1] - data.theta[0]);
    if (phi1.is_zero())
        throw GenerationError("derived phi_1 vanishes for this d1 data");
    ParameterArray pa{f, 1,
                      {data.theta[0], data.theta[1]},
                      {data.theta_star[0], data.theta_star[1]},
                      {data.varphi1},
                      {phi1}};
    return detail::finish(std::move(pa), "d1");
}

inline ParameterArray generate_case0_d1(const std::array<FieldElement, 2>& theta,
                                        const std::array<FieldElement, 2>& theta_star,
                                        const FieldElement& varphi1) {
    return generate_case0_d1(CaseZeroD1Data{theta, theta_star, varphi1});
}

}  // namespace lpkit
