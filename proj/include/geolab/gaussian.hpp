#pragma once

#include <gmpxx.h>

#include <string>

#include "geolab/errors.hpp"

namespace geolab {

// Element of Q(i): a pair of exact rationals. mpq_class keeps itself
// canonical under arithmetic, so equality is plain component equality.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long v) : re_(v), im_(0) {}            // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {} // NOLINT(google-explicit-constructor)
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }

    static GaussRat from_ratio(long num, long den) {
        if (den == 0) throw ZeroDenominator("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return GaussRat(q);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    // |z|^2 as an exact rational.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }

    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class i2 = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i2);
        return *this;
    }

    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw DivisionByZero("division by zero in Q(i)");
        mpq_class n = o.norm();
        mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
        mpq_class i2 = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        im_ = std::move(i2);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { a *= b; return a; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { a /= b; return a; }

    GaussRat inverse() const {
        GaussRat one(1);
        one /= *this;
        return one;
    }

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    // Total order used only to make container layouts deterministic.
    bool operator<(const GaussRat& o) const {
        if (re_ != o.re_) return re_ < o.re_;
        return im_ < o.im_;
    }

    // Canonical text: "0", "3/2", "i", "-i", "2*i", "1+i", "3/2-2*i".
    // Re-parseable with * binding i to its coefficient.
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re_ != 0) out += re_.get_str();
        if (im_ != 0) {
            if (im_ == 1) {
                out += out.empty() ? "i" : "+i";
            } else if (im_ == -1) {
                out += "-i";
            } else {
                std::string ims = im_.get_str();
                if (!out.empty() && ims[0] != '-') out += "+";
                out += ims + "*i";
            }
        }
        return out;
    }

private:
    mpq_class re_, im_;
};

} // namespace geolab
