#include "klr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace klr {

namespace {

void validate_rearrangement(const std::vector<int>& entries) {
    const int n = static_cast<int>(entries.size());
    if (n == 0) throw DomainError("permutation degree must be at least 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries) {
        if (v < 1 || v > n) {
            throw ParseError("permutation entry " + std::to_string(v) + " out of range 1.." +
                             std::to_string(n));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw ParseError("duplicate entry " + std::to_string(v) + " in permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

}  // namespace

Permutation Permutation::identity(int n) {
    if (n < 1) throw DomainError("permutation degree must be at least 1");
    std::vector<int> entries(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) entries[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(entries));
}

Permutation Permutation::from_one_line(std::vector<int> entries) {
    validate_rearrangement(entries);
    return Permutation(std::move(entries));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> entries;
    const bool separated = text.find(',') != std::string::npos ||
                           text.find(' ') != std::string::npos;
    if (separated) {
        std::string piece;
        std::istringstream in(text);
        // commas and spaces are interchangeable separators
        std::string normalized = text;
        std::replace(normalized.begin(), normalized.end(), ',', ' ');
        std::istringstream stream(normalized);
        while (stream >> piece) {
            try {
                std::size_t used = 0;
                int value = std::stoi(piece, &used);
                if (used != piece.size()) throw std::invalid_argument(piece);
                entries.push_back(value);
            } catch (const std::exception&) {
                throw ParseError("cannot parse permutation entry '" + piece + "'");
            }
        }
    } else {
        // compact digit form, one digit per value; only meaningful for n <= 9
        for (char ch : text) {
            if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0') {
                throw ParseError("compact permutation form accepts digits 1-9 only, got '" +
                                 std::string(1, ch) + "'");
            }
            entries.push_back(ch - '0');
        }
    }
    if (entries.empty()) throw ParseError("empty permutation text");
    validate_rearrangement(entries);
    return Permutation(std::move(entries));
}

int Permutation::at(int i) const {
    if (i < 1 || i > degree()) {
        throw DomainError("position " + std::to_string(i) + " out of range 1.." +
                          std::to_string(degree()));
    }
    return entries_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::compose(const Permutation& v) const {
    if (degree() != v.degree()) {
        throw DegreeMismatchError("cannot compose permutations of degrees " +
                                  std::to_string(degree()) + " and " +
                                  std::to_string(v.degree()));
    }
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = entries_[static_cast<std::size_t>(v.entries_[i] - 1)];
    }
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(entries_.size());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        out[static_cast<std::size_t>(entries_[i] - 1)] = static_cast<int>(i) + 1;
    }
    return Permutation(std::move(out));
}

int Permutation::length() const {
    int count = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        for (std::size_t j = i + 1; j < entries_.size(); ++j) {
            if (entries_[i] > entries_[j]) ++count;
        }
    }
    return count;
}

std::vector<int> Permutation::right_descents() const {
    std::vector<int> out;
    for (int j = 1; j < degree(); ++j) {
        if (entries_[static_cast<std::size_t>(j - 1)] > entries_[static_cast<std::size_t>(j)]) {
            out.push_back(j);
        }
    }
    return out;
}

bool Permutation::is_right_descent(int j) const {
    if (j < 1 || j >= degree()) return false;
    return entries_[static_cast<std::size_t>(j - 1)] > entries_[static_cast<std::size_t>(j)];
}

Permutation Permutation::right_mult_adjacent(int j) const {
    if (j < 1 || j >= degree()) {
        throw DomainError("generator index " + std::to_string(j) + " out of range 1.." +
                          std::to_string(degree() - 1));
    }
    std::vector<int> out = entries_;
    std::swap(out[static_cast<std::size_t>(j - 1)], out[static_cast<std::size_t>(j)]);
    return Permutation(std::move(out));
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) out << ",";
        out << entries_[i];
    }
    return out.str();
}

}  // namespace klr
