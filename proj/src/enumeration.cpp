#include "cremona/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <set>
#include <thread>

#include "cremona/error.hpp"

namespace cremona {

namespace {

void append_compositions(std::int64_t remaining, std::size_t index, std::vector<std::int64_t>& current,
                         std::vector<std::vector<std::int64_t>>& out) {
  if (index + 1 == current.size()) {
    current[index] = remaining;
    out.push_back(current);
    return;
  }
  for (std::int64_t v = 0; v <= remaining; ++v) {
    current[index] = v;
    append_compositions(remaining - v, index + 1, current, out);
  }
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <class Body>
void parallel_for(std::size_t count, int jobs, Body body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// Depth-first search over strictly increasing row indices below one fixed
// first row. Distinct rows are forced since equal rows give det = 0.
class SubtreeSearch {
 public:
  SubtreeSearch(const std::vector<std::vector<std::int64_t>>& rows, const std::vector<unsigned>& zero_masks,
                std::size_t size, std::int64_t d, bool prune)
      : rows_(rows), zero_masks_(zero_masks), size_(size), d_(d), prune_(prune),
        full_mask_((1u << size) - 1), chosen_(size) {}

  void run(std::size_t first) {
    chosen_[0] = first;
    descend(1, zero_masks_[first]);
  }

  std::uint64_t raw_count() const { return raw_count_; }
  std::set<ExponentMatrix>& classes() { return classes_; }

 private:
  void descend(std::size_t depth, unsigned mask) {
    if (depth == size_) {
      leaf(mask);
      return;
    }
    for (std::size_t idx = chosen_[depth - 1] + 1; idx < rows_.size(); ++idx) {
      const unsigned next_mask = mask | zero_masks_[idx];
      if (prune_) {
        // Each later row has at most size-1 zeros to contribute.
        const auto missing = static_cast<std::size_t>(std::popcount(full_mask_ & ~next_mask));
        const std::size_t rows_left = size_ - depth - 1;
        if (missing > rows_left * (size_ - 1)) continue;
      }
      chosen_[depth] = idx;
      descend(depth + 1, next_mask);
    }
  }

  void leaf(unsigned mask) {
    if (mask != full_mask_) return;
    IntMatrix m(size_);
    std::vector<std::int64_t> flat;
    flat.reserve(size_ * size_);
    for (std::size_t r = 0; r < size_; ++r)
      for (std::size_t c = 0; c < size_; ++c) {
        const std::int64_t v = rows_[chosen_[r]][c];
        m(r, c) = static_cast<long>(v);
        flat.push_back(v);
      }
    if (abs(determinant(m)) != d_) return;
    ++raw_count_;
    classes_.insert(canonical_form(make_exponent_matrix(size_, std::move(flat))));
  }

  const std::vector<std::vector<std::int64_t>>& rows_;
  const std::vector<unsigned>& zero_masks_;
  std::size_t size_;
  std::int64_t d_;
  bool prune_;
  unsigned full_mask_;
  std::vector<std::size_t> chosen_;
  std::uint64_t raw_count_ = 0;
  std::set<ExponentMatrix> classes_;
};

}  // namespace

std::vector<std::vector<std::int64_t>> compositions(std::int64_t d, int parts) {
  if (d < 0 || parts < 1) fail(ErrorKind::Malformed, "compositions need d >= 0 and parts >= 1");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> current(static_cast<std::size_t>(parts));
  append_compositions(d, 0, current, out);
  return out;
}

SearchResult search_classes(int n, std::int64_t d, const SearchOptions& options) {
  if (n < 2 || n > 4)
    fail(ErrorKind::UnsupportedDimension, "enumeration supports n = 2, 3, 4; got n = " + std::to_string(n));
  if (d < 1) fail(ErrorKind::DegreeZero, "enumeration needs d >= 1");

  const std::size_t size = static_cast<std::size_t>(n) + 1;
  const auto rows = compositions(d, static_cast<int>(size));
  std::vector<unsigned> zero_masks(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < size; ++c)
      if (rows[i][c] == 0) zero_masks[i] |= 1u << c;

  // One task per choice of the first (smallest) row.
  std::vector<SearchResult> partial(rows.size());
  std::vector<std::set<ExponentMatrix>> partial_sets(rows.size());
  parallel_for(rows.size(), options.jobs, [&](std::size_t first) {
    SubtreeSearch search(rows, zero_masks, size, d, options.prune);
    search.run(first);
    partial[first].raw_count = search.raw_count();
    partial_sets[first] = std::move(search.classes());
  });

  SearchResult result;
  std::set<ExponentMatrix> merged;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    result.raw_count += partial[i].raw_count;
    merged.merge(partial_sets[i]);
  }
  result.classes.assign(merged.begin(), merged.end());
  return result;
}

void enumerate_maps(int n, std::int64_t d, const std::function<void(const ExponentMatrix&)>& callback,
                    const SearchOptions& options) {
  for (const auto& e : search_classes(n, d, options).classes) callback(e);
}

std::int64_t conjectured_bound(int n, std::int64_t d) {
  std::int64_t bound = 0, power = 1;
  for (int i = 0; i < n; ++i) {
    bound += power;
    power *= d - 1;
  }
  return bound;
}

namespace {

ClassRecord examine(const ExponentMatrix& e, int n, std::int64_t d, std::int64_t bound, KMode kmode) {
  ClassRecord record{e, 0, std::nullopt, std::nullopt};
  try {
    record.dprime = inverse_degree(e);
    if (n == 3 && d >= 2) {
      record.report = johnson_check(e, kmode);
    } else if (n == 2 && record.dprime != d) {
      record.violation = Violation{e, "plane map with d' = " + std::to_string(record.dprime) + " != d"};
    } else if (record.dprime > bound) {
      record.violation = Violation{e, "d' = " + std::to_string(record.dprime) + " exceeds bound " +
                                          std::to_string(bound)};
    }
  } catch (const TheoryViolation& err) {
    record.violation = Violation{e, err.what()};
  }
  return record;
}

}  // namespace

EnumerationSummary verify_bounds(int n, std::int64_t d, const VerifyOptions& options) {
  SearchResult found = search_classes(n, d, {options.jobs, true});

  EnumerationSummary summary;
  summary.n = n;
  summary.d = d;
  summary.bound = conjectured_bound(n, d);
  summary.raw_count = found.raw_count;
  summary.class_count = found.classes.size();

  std::vector<std::optional<ClassRecord>> records(found.classes.size());
  parallel_for(found.classes.size(), options.jobs, [&](std::size_t i) {
    records[i] = examine(found.classes[i], n, d, summary.bound, options.kmode);
  });

  bool first = true;
  for (const auto& slot : records) {
    const ClassRecord& record = *slot;
    if (first || record.dprime > summary.max_dprime) summary.max_dprime = record.dprime;
    if (first || record.dprime < summary.min_dprime) summary.min_dprime = record.dprime;
    first = false;
    if (record.dprime == summary.bound) summary.extremal_classes.push_back(record.canonical);
    if (record.report) ++summary.case_histogram[static_cast<std::size_t>(record.report->case_label.label)];
    if (record.violation) summary.violations.push_back(*record.violation);
    if (options.on_class) options.on_class(record);
  }
  return summary;
}

nlohmann::ordered_json to_json(const EnumerationSummary& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  j["d"] = s.d;
  j["bound"] = s.bound;
  j["raw_count"] = s.raw_count;
  j["class_count"] = s.class_count;
  j["max_dprime"] = s.max_dprime;
  j["min_dprime"] = s.min_dprime;
  if (s.n == 3 && s.d >= 2) {
    nlohmann::ordered_json hist;
    for (Case c : {Case::I, Case::II, Case::III, Case::IV})
      hist[std::string(to_string(c))] = s.case_histogram[static_cast<std::size_t>(c)];
    j["case_histogram"] = hist;
  } else {
    j["case_histogram"] = nullptr;
  }
  j["extremal_classes"] = nlohmann::ordered_json::array();
  for (const auto& e : s.extremal_classes) j["extremal_classes"].push_back(e.rows());
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : s.violations) {
    nlohmann::ordered_json item;
    item["rows"] = v.matrix.rows();
    item["reason"] = v.reason;
    j["violations"].push_back(item);
  }
  return j;
}

}  // namespace cremona
