#include "brieskorn/exponents.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace brieskorn {

Rat parse_rational(const std::string& text) {
    auto bad = [&] { return validation_error("cannot parse rational '" + text + "'"); };
    std::string s = text;
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw bad();
    auto slash = s.find('/');
    auto parse_int = [&](const std::string& part) {
        if (part.empty()) throw bad();
        size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
        if (i == part.size()) throw bad();
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) throw bad();
        return Int(part);
    };
    if (slash == std::string::npos) return Rat(parse_int(s));
    Int p = parse_int(s.substr(0, slash));
    Int q = parse_int(s.substr(slash + 1));
    if (q == 0) throw validation_error("rational with zero denominator: '" + text + "'");
    return Rat(p, q);
}

ExponentList::ExponentList(std::vector<long long> exps) : a_(std::move(exps)) {
    if (a_.size() < 2)
        throw validation_error("exponent list must have at least 2 entries");
    if (a_.size() > kMaxLength)
        throw validation_error("exponent list longer than 16 entries is not supported");
    for (long long v : a_)
        if (v < 1) throw validation_error("exponents must be >= 1");
}

ExponentList ExponentList::parse(const std::vector<std::string>& tokens) {
    std::vector<long long> v;
    for (const auto& t : tokens) {
        try {
            size_t pos = 0;
            long long x = std::stoll(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            v.push_back(x);
        } catch (const std::exception&) {
            throw validation_error("cannot parse exponent '" + t + "'");
        }
    }
    return ExponentList(std::move(v));
}

long long ExponentList::lcm() const {
    long long acc = 1;
    for (long long v : a_) acc = lcm_ll(acc, v);
    return acc;
}

long long ExponentList::gcd() const {
    long long acc = 0;
    for (long long v : a_) acc = gcd_ll(acc, v);
    return acc;
}

bool ExponentList::pairwise_coprime() const {
    for (size_t i = 0; i < a_.size(); ++i)
        for (size_t j = i + 1; j < a_.size(); ++j)
            if (gcd_ll(a_[i], a_[j]) != 1) return false;
    return true;
}

std::vector<long long> ExponentList::sorted_desc() const {
    std::vector<long long> v = a_;
    std::sort(v.rbegin(), v.rend());
    return v;
}

std::string ExponentList::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a_.size(); ++i) {
        if (i) os << ",";
        os << a_[i];
    }
    os << ")";
    return os.str();
}

SubsetSelector SubsetSelector::full(size_t n) {
    if (n >= 64) throw validation_error("subset selector supports at most 63 positions");
    return SubsetSelector((uint64_t(1) << n) - 1);
}

std::vector<size_t> SubsetSelector::positions() const {
    std::vector<size_t> out;
    for (size_t i = 0; i < 64; ++i)
        if (mask_ & (uint64_t(1) << i)) out.push_back(i);
    return out;
}

ExponentList subset_list(const ExponentList& a, SubsetSelector sel) {
    std::vector<long long> v;
    for (size_t i : sel.positions()) {
        if (i >= a.size()) throw validation_error("subset selector out of range");
        v.push_back(a[i]);
    }
    return ExponentList(std::move(v));
}

}  // namespace brieskorn
