#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tropcurve {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int int_gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }
inline Int int_abs(const Int& a) { return boost::multiprecision::abs(a); }
inline Rat rat_abs(const Rat& a) { return a < 0 ? Rat(-a) : a; }

// gcd extended to Q: gcd(a/b, c/d) = gcd(ad, cb) / bd. Zero arguments are absorbed.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return rat_abs(b);
    if (b == 0) return rat_abs(a);
    Int n = int_gcd(rat_num(a) * rat_den(b), rat_num(b) * rat_den(a));
    Int d = rat_den(a) * rat_den(b);
    return Rat(n, d);
}

inline std::string int_str(const Int& v) { return v.str(); }

inline std::string rat_str(const Rat& r) {
    Int d = rat_den(r);
    if (d == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + d.str();
}

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
    return Int(s);
}

// Accepts "p" or "p/q" with q > 0.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int n = parse_int(s.substr(0, slash));
    Int d = parse_int(s.substr(slash + 1));
    if (d <= 0) throw std::invalid_argument("rational with non-positive denominator: " + s);
    return Rat(n, d);
}

inline double to_double(const Rat& r) { return r.template convert_to<double>(); }

inline std::vector<Int> first_primes(std::size_t n) {
    std::vector<Int> out;
    Int c = 2;
    while (out.size() < n) {
        bool prime = true;
        for (const Int& p : out) {
            if (p * p > c) break;
            if (c % p == 0) { prime = false; break; }
        }
        if (prime) out.push_back(c);
        ++c;
    }
    return out;
}

// Greedy Sidon sequence (1, 2, 4, 8, 13, ...): all pairwise differences distinct.
inline std::vector<Int> sidon_sequence(std::size_t n) {
    std::vector<Int> a;
    std::vector<bool> used_sum;  // indexed by sum, grows on demand
    auto sum_used = [&](const Int& s) {
        std::size_t i = s.template convert_to<std::size_t>();
        return i < used_sum.size() && used_sum[i];
    };
    auto mark_sum = [&](const Int& s) {
        std::size_t i = s.template convert_to<std::size_t>();
        if (i >= used_sum.size()) used_sum.resize(i + 1, false);
        used_sum[i] = true;
    };
    Int cand = 1;
    while (a.size() < n) {
        bool ok = !sum_used(cand + cand);
        if (ok)
            for (const Int& x : a)
                if (sum_used(cand + x)) { ok = false; break; }
        if (ok) {
            for (const Int& x : a) mark_sum(cand + x);
            mark_sum(cand + cand);
            a.push_back(cand);
        }
        ++cand;
    }
    return a;
}

}  // namespace tropcurve
