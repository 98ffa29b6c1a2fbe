#pragma once

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "netgram/errors.hpp"
#include "netgram/format.hpp"
#include "netgram/matrix.hpp"
#include "netgram/spectral.hpp"

namespace netgram {

enum class Family { star, path, ring, complete };
enum class Orientation { directed, undirected };

// Canonical graph family instance.  Node numbering is 1-based at the API
// surface: star hub and path root are node 1; ring edges run i -> i+1 with a
// closing edge n -> 1.
struct GraphSpec {
    Family family = Family::path;
    Orientation orientation = Orientation::directed;
    std::size_t n = 2;
};

inline const char* family_name(Family f) {
    switch (f) {
        case Family::star: return "star";
        case Family::path: return "path";
        case Family::ring: return "ring";
        case Family::complete: return "complete";
    }
    return "?";
}

inline const char* orientation_name(Orientation o) {
    return o == Orientation::directed ? "directed" : "undirected";
}

inline void validate(const GraphSpec& spec) {
    if (spec.n < 2) throw invalid_spec("graph size must be at least 2");
    if (spec.family == Family::ring && spec.n < 3)
        throw invalid_spec("ring graphs need at least 3 nodes");
    if (spec.family == Family::complete && spec.orientation == Orientation::directed)
        throw invalid_spec("complete graphs are undirected only");
}

// Adjacency with the receiver-row convention: entry (j, i) is 1 when the
// graph has an edge i -> j, so column i lists who node i feeds.
inline Matrix build_adjacency(const GraphSpec& spec) {
    validate(spec);
    const std::size_t n = spec.n;
    Matrix a(n, n);
    auto edge = [&](std::size_t from, std::size_t to) {
        a(to - 1, from - 1) = 1.0;
        if (spec.orientation == Orientation::undirected) a(from - 1, to - 1) = 1.0;
    };
    switch (spec.family) {
        case Family::star:
            for (std::size_t leaf = 2; leaf <= n; ++leaf) edge(1, leaf);
            break;
        case Family::path:
            for (std::size_t i = 1; i < n; ++i) edge(i, i + 1);
            break;
        case Family::ring:
            for (std::size_t i = 1; i < n; ++i) edge(i, i + 1);
            edge(n, 1);
            break;
        case Family::complete:
            for (std::size_t i = 1; i <= n; ++i)
                for (std::size_t j = i + 1; j <= n; ++j) edge(i, j);
            break;
    }
    return a;
}

// Row/column absolute-sum summary; m is the larger of the two maxima.
struct BoundednessReport {
    double max_row_sum = 0.0;
    double max_col_sum = 0.0;
    double m = 0.0;

    bool strictly_bounded_by(double bound) const {
        return max_row_sum < bound && max_col_sum < bound;
    }
    bool bounded_by(double bound) const {
        return max_row_sum <= bound && max_col_sum <= bound;
    }
};

inline BoundednessReport local_bound(const Matrix& a) {
    BoundednessReport r;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += std::fabs(a(i, j));
        r.max_row_sum = std::max(r.max_row_sum, s);
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::fabs(a(i, j));
        r.max_col_sum = std::max(r.max_col_sum, s);
    }
    r.m = std::max(r.max_row_sum, r.max_col_sum);
    return r;
}

inline Matrix scale_adjacency(const Matrix& a, double gamma) {
    if (!(gamma > 0.0)) throw invalid_gamma("gamma must be positive");
    return scale(a, 1.0 / gamma);
}

// Smallest scaling that keeps every family member of size <= n_max a strict
// contraction, times a safety margin > 1.  Uses the family-wide supremum of
// the largest singular value: sqrt(n-1) for stars, n-1 for complete graphs,
// 2 for undirected chains and rings, 1 for directed ones.
inline double choose_gamma(Family family, Orientation orientation,
                           std::size_t n_max, double margin) {
    if (!(margin > 1.0)) throw invalid_gamma("margin must exceed 1");
    validate(GraphSpec{family, orientation, n_max});
    switch (family) {
        case Family::star: return margin * std::sqrt(double(n_max - 1));
        case Family::complete: return margin * double(n_max - 1);
        case Family::path:
        case Family::ring:
            return margin * (orientation == Orientation::undirected ? 2.0 : 1.0);
    }
    throw invalid_spec("unknown family");
}

// Analytic spectra of the unscaled adjacencies.  Undirected families report
// eigenvalues; directed ones report squared singular values.  Sorted
// descending either way.
inline Spectrum closed_form_spectrum(const GraphSpec& spec) {
    validate(spec);
    const std::size_t n = spec.n;
    const double nd = double(n);
    Spectrum s;
    s.kind = spec.orientation == Orientation::undirected
        ? SpectrumKind::eigenvalues
        : SpectrumKind::squared_singular_values;
    s.values.reserve(n);
    if (spec.orientation == Orientation::undirected) {
        switch (spec.family) {
            case Family::star:
                s.values.push_back(std::sqrt(nd - 1.0));
                s.values.insert(s.values.end(), n - 2, 0.0);
                s.values.push_back(-std::sqrt(nd - 1.0));
                break;
            case Family::path:
                for (std::size_t i = 1; i <= n; ++i)
                    s.values.push_back(2.0 * std::cos(double(i) * std::numbers::pi / (nd + 1.0)));
                break;
            case Family::ring:
                for (std::size_t k = 0; k < n; ++k)
                    s.values.push_back(2.0 * std::cos(2.0 * std::numbers::pi * double(k) / nd));
                break;
            case Family::complete:
                s.values.push_back(nd - 1.0);
                s.values.insert(s.values.end(), n - 1, -1.0);
                break;
        }
    } else {
        switch (spec.family) {
            case Family::star:
                s.values.push_back(nd - 1.0);
                s.values.insert(s.values.end(), n - 1, 0.0);
                break;
            case Family::path:
                s.values.insert(s.values.end(), n - 1, 1.0);
                s.values.push_back(0.0);
                break;
            case Family::ring:
                s.values.insert(s.values.end(), n, 1.0);
                break;
            case Family::complete:
                break; // unreachable: validate() rejects directed complete
        }
    }
    std::sort(s.values.begin(), s.values.end(), std::greater<double>());
    return s;
}

// Adjacency text format: first line holds the node count, each further line
// one "i j [weight]" triple meaning an edge i -> j (1-based, weight default 1)
// stored at entry (j, i).  Undirected graphs simply list both directions.
inline Matrix read_adjacency(std::istream& in) {
    std::string line;
    std::size_t n = 0;
    bool have_size = false;
    while (!have_size && std::getline(in, line)) {
        std::istringstream head(line);
        if (head >> n) {
            have_size = true;
        } else {
            std::string tok;
            std::istringstream probe(line);
            if (probe >> tok)
                throw invalid_spec("adjacency file: expected a node count, got \"" + tok + "\"");
        }
    }
    if (!have_size || n < 2)
        throw invalid_spec("adjacency file: node count must be at least 2");
    Matrix a(n, n);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream row(line);
        std::size_t i = 0, j = 0;
        if (!(row >> i)) continue; // blank line
        double w = 1.0;
        if (!(row >> j))
            throw invalid_spec("adjacency file: line " + std::to_string(lineno)
                               + " is missing the target node");
        row >> w;
        if (i < 1 || i > n || j < 1 || j > n)
            throw invalid_spec("adjacency file: line " + std::to_string(lineno)
                               + " references a node outside 1.." + std::to_string(n));
        if (!std::isfinite(w))
            throw invalid_spec("adjacency file: line " + std::to_string(lineno)
                               + " has a non-finite weight");
        a(j - 1, i - 1) = w;
    }
    return a;
}

inline void write_adjacency(std::ostream& out, const Matrix& a) {
    if (!a.square()) throw dimension_mismatch("write_adjacency: matrix not square");
    const std::size_t n = a.rows();
    out << n << "\n";
    for (std::size_t i = 0; i < n; ++i) {       // source node i+1
        for (std::size_t j = 0; j < n; ++j) {   // target node j+1
            const double w = a(j, i);
            if (w == 0.0) continue;
            out << (i + 1) << " " << (j + 1);
            if (w != 1.0) out << " " << format_double(w);
            out << "\n";
        }
    }
}

} // namespace netgram
