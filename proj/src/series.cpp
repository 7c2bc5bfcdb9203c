#include "embfilt/series.hpp"

#include <algorithm>
#include <sstream>

namespace embfilt {

Box::Box(std::vector<Int> b) : bound(std::move(b)) {
    if (bound.empty()) throw error("box needs rank >= 1");
    for (Int x : bound)
        if (x < 0) throw error("box bounds must be nonnegative");
}

FactoredSeries::FactoredSeries(size_t rank, Rational scalar) : rank_(rank), scalar_(std::move(scalar)) {
    if (rank_ == 0) throw error("factored series needs rank >= 1");
    if (scalar_ == 0) throw error("factored series scalar must be nonzero");
}

void FactoredSeries::multiply_factor(const std::vector<Int>& m, Int e) {
    if (m.size() != rank_) throw error("factor tuple rank mismatch");
    bool zero = true;
    for (Int x : m) {
        if (x < 0) throw error("factor tuple entries must be nonnegative");
        if (x != 0) zero = false;
    }
    if (zero) throw error("factor tuple must be nonzero (a (1-t^0) factor is singular)");
    if (e == 0) return;
    auto [it, inserted] = factors_.emplace(m, e);
    if (!inserted) {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
    }
}

void FactoredSeries::multiply_scalar(const Rational& c) {
    if (c == 0) throw error("factored series scalar must be nonzero");
    scalar_ *= c;
}

FactoredSeries FactoredSeries::operator*(const FactoredSeries& other) const {
    if (rank_ != other.rank_) throw error("factored series rank mismatch");
    FactoredSeries out = *this;
    out.multiply_scalar(other.scalar_);
    for (const auto& [m, e] : other.factors_) out.multiply_factor(m, e);
    return out;
}

TruncatedSeries::TruncatedSeries(Box box) : box_(std::move(box)) {
    strides_.assign(box_.rank(), 1);
    size_t cells = 1;
    for (size_t i = box_.rank(); i-- > 0;) {
        strides_[i] = static_cast<Int>(cells);
        cells *= static_cast<size_t>(box_.bound[i] + 1);
    }
    data_.assign(cells, Rational(0));
}

size_t TruncatedSeries::offset_of(const ValueTuple& v) const {
    if (v.size() != box_.rank()) throw error("tuple rank mismatch");
    size_t off = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0 || v[i] > box_.bound[i]) throw error("tuple outside the box");
        off += static_cast<size_t>(v[i] * strides_[i]);
    }
    return off;
}

const Rational& TruncatedSeries::coefficient(const ValueTuple& v) const {
    return data_[offset_of(v)];
}

void TruncatedSeries::set_coefficient(const ValueTuple& v, Rational c) {
    data_[offset_of(v)] = std::move(c);
}

ValueTuple TruncatedSeries::tuple_at(size_t index) const {
    ValueTuple v(box_.rank());
    for (size_t i = 0; i < box_.rank(); ++i) {
        v[i] = static_cast<Int>(index / static_cast<size_t>(strides_[i]));
        index %= static_cast<size_t>(strides_[i]);
    }
    return v;
}

TruncatedSeries expand(const FactoredSeries& f, const Box& box) {
    if (f.rank() != box.rank()) throw error("box rank mismatch");
    TruncatedSeries out(box);
    out.set_coefficient(ValueTuple(box.rank(), 0), f.scalar());

    const size_t cells = out.cell_count();
    auto& data = out.data();
    for (const auto& [m, e] : f.factors()) {
        // Multiplying by (1-t^m) is c(v) -= c(v-m); dividing is the inverse
        // recurrence c(v) += c(v-m). Row-major order extends the componentwise
        // order, so the in-place sweeps below are valid.
        std::vector<size_t> shifted; // indices whose v-m stays in the box
        size_t shift = 0;            // constant offset between v and v-m
        shifted.reserve(cells);
        for (size_t idx = 0; idx < cells; ++idx) {
            ValueTuple v = out.tuple_at(idx);
            bool inside = true;
            for (size_t i = 0; i < v.size(); ++i)
                if (v[i] < m[i]) {
                    inside = false;
                    break;
                }
            if (inside) shifted.push_back(idx);
        }
        {
            std::vector<size_t> strides(box.rank());
            size_t stride = 1;
            for (size_t i = box.rank(); i-- > 0;) {
                strides[i] = stride;
                stride *= static_cast<size_t>(box.bound[i] + 1);
            }
            for (size_t i = 0; i < box.rank(); ++i) shift += static_cast<size_t>(m[i]) * strides[i];
        }
        for (Int rep = 0; rep < (e > 0 ? e : -e); ++rep) {
            if (e > 0) {
                for (size_t k = shifted.size(); k-- > 0;) {
                    size_t idx = shifted[k];
                    data[idx] -= data[idx - shift];
                }
            } else {
                for (size_t idx : shifted) data[idx] += data[idx - shift];
            }
        }
    }
    return out;
}

FactoredSeries ambient_closed_form(const ValuationSystem& sys) {
    FactoredSeries out(sys.rank());
    for (size_t k = 0; k < sys.dim(); ++k) {
        std::vector<Int> column(sys.rank());
        bool zero = true;
        for (size_t j = 0; j < sys.rank(); ++j) {
            column[j] = sys.valuation(j)[k];
            if (column[j] != 0) zero = false;
        }
        if (zero)
            throw error("variable " + std::to_string(k + 1) + " is invisible to every valuation");
        out.multiply_factor(column, -1);
    }
    return out;
}

FactoredSeries embedded_closed_form(const ValuationSystem& sys, const Polynomial& h) {
    if (h.is_zero()) throw error("embedded series of the zero polynomial");
    if (h.dim() != sys.dim()) throw error("polynomial dimension mismatch");
    ValueTuple q = value_tuple(sys, h);
    if (std::all_of(q.begin(), q.end(), [](Int x) { return x == 0; }))
        throw error("h has value tuple zero; the embedded series vanishes");
    FactoredSeries out = ambient_closed_form(sys);
    out.multiply_factor(q, 1);
    return out;
}

FactoredSeries substitute_powers(const FactoredSeries& f, const std::vector<Int>& n) {
    if (n.size() != f.rank()) throw error("substitution tuple rank mismatch");
    for (Int x : n)
        if (x < 0) throw error("substitution powers must be nonnegative");
    FactoredSeries out(1, f.scalar());
    for (const auto& [m, e] : f.factors()) {
        Int s = 0;
        for (size_t j = 0; j < n.size(); ++j) s += n[j] * m[j];
        if (s == 0)
            throw error("substitution collapses a factor exponent to zero");
        out.multiply_factor({s}, e);
    }
    return out;
}

DominantFactor extract_dominant_factor(const FactoredSeries& f) {
    const std::vector<Int>* best = nullptr;
    for (const auto& [m, e] : f.factors()) {
        if (e <= 0) continue;
        bool weak_max = true;
        for (const auto& [m2, e2] : f.factors()) {
            if (m2 == m) continue;
            for (size_t i = 0; i < m.size(); ++i)
                if (m[i] < m2[i]) {
                    weak_max = false;
                    break;
                }
            if (!weak_max) break;
        }
        if (weak_max) {
            best = &m;
            break;
        }
    }
    if (!best) throw error("no componentwise-maximal factor in the numerator");
    for (const auto& [m2, e2] : f.factors()) {
        if (m2 == *best) continue;
        for (size_t i = 0; i < best->size(); ++i)
            if ((*best)[i] <= m2[i])
                throw error("dominant factor ties another factor; input is not general");
    }
    DominantFactor out{*best, f};
    out.remainder.multiply_factor(*best, -1);
    return out;
}

TruncatedSeries poincare_from_codims(const std::function<Int(const ValueTuple&)>& codim,
                                     const Box& box, size_t rank) {
    if (box.rank() != rank) throw error("box rank mismatch");
    TruncatedSeries out(box);
    const Int outer = (rank % 2 == 1) ? 1 : -1; // (-1)^(r+1)
    for (size_t idx = 0; idx < out.cell_count(); ++idx) {
        ValueTuple v = out.tuple_at(idx);
        Int sum = 0;
        for (size_t subset = 0; subset < (size_t(1) << rank); ++subset) {
            ValueTuple w(v);
            int bits = 0;
            for (size_t j = 0; j < rank; ++j) {
                w[j] += 1;
                if (subset & (size_t(1) << j)) {
                    w[j] -= 1;
                    ++bits;
                }
            }
            Int term = codim(w);
            sum += (bits % 2 == 0) ? term : -term;
        }
        Int c = outer * sum;
        if (c != 0) out.set_coefficient(v, Rational(c));
    }
    return out;
}

std::string render_factored(const FactoredSeries& f) {
    std::ostringstream os;
    bool first = true;
    if (f.scalar() != 1) {
        os << to_string(f.scalar());
        first = false;
    }
    auto emit = [&](const std::vector<Int>& m, Int e) {
        if (!first) os << " * ";
        first = false;
        os << "(1-";
        bool first_var = true;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << (f.rank() == 1 ? "t" : "t" + std::to_string(i + 1));
            if (m[i] != 1) os << "^" << m[i];
        }
        os << ")^" << e;
    };
    for (const auto& [m, e] : f.factors())
        if (e > 0) emit(m, e);
    for (const auto& [m, e] : f.factors())
        if (e < 0) emit(m, e);
    if (first) os << "1";
    return os.str();
}

} // namespace embfilt
