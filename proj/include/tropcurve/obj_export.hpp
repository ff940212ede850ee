#pragma once

#include "tropcurve/embedding.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace tropcurve {

// Wavefront OBJ with line elements: segments as drawn, rays truncated at
// ray_length (in primitive-direction units). Only the first three coordinates
// are exported; lower-dimensional curves are zero padded.
inline void export_obj(const EmbeddedTropicalCurve& c, const std::string& path,
                       const Rat& ray_length = 1) {
    if (ray_length <= 0) throw std::invalid_argument("ray length must be positive");
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << "# tropcurve line export\n";
    auto emit = [&](const std::vector<Rat>& x) {
        out << "v";
        for (std::size_t i = 0; i < 3; ++i)
            out << " " << (i < x.size() ? to_double(x[i]) : 0.0);
        out << "\n";
    };
    std::size_t n = 0;
    for (const Segment& s : c.segments) {
        emit(s.a);
        emit(s.b);
        out << "l " << n + 1 << " " << n + 2 << "\n";
        n += 2;
    }
    for (const Ray& r : c.rays) {
        std::vector<Rat> tip = r.base;
        for (std::size_t i = 0; i < c.dim; ++i) tip[i] += ray_length * Rat(r.dir[i]);
        emit(r.base);
        emit(tip);
        out << "l " << n + 1 << " " << n + 2 << "\n";
        n += 2;
    }
}

}  // namespace tropcurve
