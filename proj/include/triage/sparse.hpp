#pragma once

// Sparse TF-IDF document vectors.

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "triage/error.hpp"
#include "triage/textprep.hpp"

namespace triage {

struct SparseEntry {
  std::uint32_t index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Entries sorted by strictly increasing index; zeros are never stored.
struct SparseVector {
  std::vector<SparseEntry> entries;

  bool empty() const { return entries.empty(); }
  std::size_t nnz() const { return entries.size(); }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;
};

inline double dot(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() && ib != b.entries.end()) {
    if (ia->index < ib->index) {
      ++ia;
    } else if (ib->index < ia->index) {
      ++ib;
    } else {
      sum += ia->value * ib->value;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

/// ||a - b||^2 over the union of stored indices.
inline double squared_distance(const SparseVector& a, const SparseVector& b) {
  double sum = 0.0;
  auto ia = a.entries.begin();
  auto ib = b.entries.begin();
  while (ia != a.entries.end() || ib != b.entries.end()) {
    if (ib == b.entries.end() || (ia != a.entries.end() && ia->index < ib->index)) {
      sum += ia->value * ia->value;
      ++ia;
    } else if (ia == a.entries.end() || ib->index < ia->index) {
      sum += ib->value * ib->value;
      ++ib;
    } else {
      const double d = ia->value - ib->value;
      sum += d * d;
      ++ia;
      ++ib;
    }
  }
  return sum;
}

inline SparseVector l2_normalized(SparseVector v) {
  double norm = 0.0;
  for (const auto& e : v.entries) norm += e.value * e.value;
  norm = std::sqrt(norm);
  if (norm > 0.0) {
    for (auto& e : v.entries) e.value /= norm;
  }
  return v;
}

struct IdfTable {
  std::vector<std::string> terms;  // column index -> term
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::uint64_t> doc_freq;
  std::vector<double> idf;
  std::uint64_t n_docs = 0;

  std::size_t size() const { return terms.size(); }

  const std::uint32_t* find(const std::string& term) const {
    const auto it = index.find(term);
    return it == index.end() ? nullptr : &it->second;
  }
};

/// idf(t) = ln(n_docs / docs containing t). Columns follow first appearance.
inline IdfTable fit_idf(const std::vector<TokenList>& documents) {
  if (documents.empty()) throw Error(ErrorKind::Precondition, "fit_idf needs at least one document");
  IdfTable table;
  table.n_docs = documents.size();
  for (const auto& doc : documents) {
    std::set<std::uint32_t> seen;
    for (const auto& t : doc) {
      auto [it, inserted] = table.index.try_emplace(t, static_cast<std::uint32_t>(table.terms.size()));
      if (inserted) {
        table.terms.push_back(t);
        table.doc_freq.push_back(0);
      }
      if (seen.insert(it->second).second) ++table.doc_freq[it->second];
    }
  }
  table.idf.resize(table.terms.size());
  for (std::size_t i = 0; i < table.terms.size(); ++i) {
    table.idf[i] = std::log(static_cast<double>(table.n_docs) / static_cast<double>(table.doc_freq[i]));
  }
  return table;
}

/// weight(t) = count of t in `tokens` * idf(t). Out-of-vocabulary tokens and
/// zero weights are dropped.
inline SparseVector vectorize(const TokenList& tokens, const IdfTable& table) {
  std::map<std::uint32_t, double> counts;
  for (const auto& t : tokens) {
    if (const auto* col = table.find(t)) counts[*col] += 1.0;
  }
  SparseVector v;
  for (const auto& [col, count] : counts) {
    const double w = count * table.idf[col];
    if (w != 0.0) v.entries.push_back({col, w});
  }
  return v;
}

}  // namespace triage
