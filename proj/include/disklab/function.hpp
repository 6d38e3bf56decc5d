#ifndef DISKLAB_FUNCTION_HPP
#define DISKLAB_FUNCTION_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>

#include "core.hpp"
#include "taylor.hpp"

// Type-erased holomorphic function handles. Structured values (Blaschke
// products, inner/outer functions, series) expose an exact log-modulus and,
// where defined, Taylor coefficients; plain callables fall back to
// log|eval|, which loses once |f| underflows. Quadrature code always goes
// through log_abs so singular inner functions can be integrated without
// underflow.

namespace disklab {

class DiskMap {
public:
    virtual ~DiskMap() = default;
    virtual cplx eval(cplx z) const = 0;
    virtual double log_abs(cplx z) const {
        const double m = std::abs(eval(z));
        if (m < 1e-300) return -std::numeric_limits<double>::infinity();
        return std::log(m);
    }
    virtual std::optional<TaylorSeries> taylor(int /*order*/) const { return std::nullopt; }
};

template <class T>
concept DiskEvaluable = requires(const T& t, cplx z) {
    { t.eval(z) } -> std::convertible_to<cplx>;
};
template <class T>
concept HasLogAbs = requires(const T& t, cplx z) {
    { t.log_abs(z) } -> std::convertible_to<double>;
};
template <class T>
concept HasTaylor = requires(const T& t, int k) {
    { t.taylor(k) } -> std::convertible_to<TaylorSeries>;
};

template <DiskEvaluable T>
class ValueMap final : public DiskMap {
public:
    explicit ValueMap(T v) : v_(std::move(v)) {}
    cplx eval(cplx z) const override { return v_.eval(z); }
    double log_abs(cplx z) const override {
        if constexpr (HasLogAbs<T>)
            return v_.log_abs(z);
        else
            return DiskMap::log_abs(z);
    }
    std::optional<TaylorSeries> taylor(int order) const override {
        if constexpr (HasTaylor<T>)
            return v_.taylor(order);
        else
            return std::nullopt;
    }
    const T& value() const { return v_; }

private:
    T v_;
};

class Handle {
public:
    Handle() = default;
    explicit Handle(std::shared_ptr<const DiskMap> impl) : impl_(std::move(impl)) {}

    template <class T>
        requires DiskEvaluable<std::remove_cvref_t<T>> &&
                 (!std::same_as<std::remove_cvref_t<T>, Handle>)
    Handle(T&& v)
        : impl_(std::make_shared<ValueMap<std::remove_cvref_t<T>>>(std::forward<T>(v))) {}

    bool valid() const { return static_cast<bool>(impl_); }
    cplx operator()(cplx z) const { return impl_->eval(z); }
    cplx eval(cplx z) const { return impl_->eval(z); }
    double log_abs(cplx z) const { return impl_->log_abs(z); }
    std::optional<TaylorSeries> taylor(int order) const { return impl_->taylor(order); }
    const DiskMap& map() const { return *impl_; }

private:
    std::shared_ptr<const DiskMap> impl_;
};

namespace detail {

class FnMap final : public DiskMap {
public:
    FnMap(std::function<cplx(cplx)> f, std::function<double(cplx)> la)
        : f_(std::move(f)), la_(std::move(la)) {}
    cplx eval(cplx z) const override { return f_(z); }
    double log_abs(cplx z) const override {
        if (la_) return la_(z);
        return DiskMap::log_abs(z);
    }

private:
    std::function<cplx(cplx)> f_;
    std::function<double(cplx)> la_;
};

} // namespace detail

inline Handle make_handle(std::function<cplx(cplx)> eval) {
    return Handle(std::make_shared<detail::FnMap>(std::move(eval), nullptr));
}
inline Handle make_handle(std::function<cplx(cplx)> eval, std::function<double(cplx)> log_abs) {
    return Handle(std::make_shared<detail::FnMap>(std::move(eval), std::move(log_abs)));
}

} // namespace disklab

#endif
