#pragma once

#include <algorithm>
#include <vector>

#include "ellq/rational.hpp"

namespace ellq {

/// Nondecreasing sequence of slopes labeling a rough stratum.
/// Entries are coprime by construction (Slope normalizes); kept sorted.
class SlopeSeq {
  public:
    SlopeSeq() = default;
    explicit SlopeSeq(std::vector<Slope> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) throw std::domain_error("slope sequence must be nonempty");
        std::sort(entries_.begin(), entries_.end());
    }

    const std::vector<Slope>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    const Slope& operator[](size_t i) const { return entries_[i]; }

    Int total_degree() const {
        Int s = 0;
        for (const auto& e : entries_) s += e.num();
        return s;
    }
    Int total_rank() const {
        Int s = 0;
        for (const auto& e : entries_) s += e.den();
        return s;
    }

    friend bool operator==(const SlopeSeq& a, const SlopeSeq& b) { return a.entries_ == b.entries_; }
    friend bool operator<(const SlopeSeq& a, const SlopeSeq& b) {
        return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(),
                                            b.entries_.begin(), b.entries_.end());
    }

    /// "{1, 8, 8}" / "{2, 15/2}" -- the display form used in DOT labels.
    std::string str() const {
        std::string s = "{";
        for (size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ", ";
            s += entries_[i].str();
        }
        return s + "}";
    }

    /// Parse a comma-separated list "0,5/2".
    static SlopeSeq parse(const std::string& text) {
        std::vector<Slope> es;
        size_t start = 0;
        while (start <= text.size()) {
            size_t pos = text.find(',', start);
            std::string piece = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
            if (!piece.empty()) es.push_back(Slope::parse(piece));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return SlopeSeq(std::move(es));
    }

  private:
    std::vector<Slope> entries_;
};

}  // namespace ellq
