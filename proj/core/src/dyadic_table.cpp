#include "fabius/dyadic_table.hpp"

#include <mutex>
#include <stdexcept>
#include <string>

#include "fabius/fabius.hpp"

namespace fabius {

namespace {

void require_index(bool ok, const char* what, long index) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": invalid index " + std::to_string(index));
}

}  // namespace

std::string_view route_name(Route route) {
  switch (route) {
    case Route::alternating: return "alternating";
    case Route::from_f: return "from_f";
    case Route::theorem: return "theorem";
    case Route::matrix: return "matrix";
    case Route::closed_form: return "closed-form";
    case Route::oracle_bounded: return "oracle-bounded";
  }
  return "unknown";
}

// f_ is always filled in pairs: after processing even i it holds 0..i+1.
void DyadicTable::grow_f(long k) {
  while (f_.size() <= static_cast<std::size_t>(k)) {
    const long i = static_cast<long>(f_.size());  // next even i
    f_.resize(static_cast<std::size_t>(i) + 2);
    f_[static_cast<std::size_t>(i) + 1] = fabius_step(i + 1, f_);
    f_[static_cast<std::size_t>(i)] = fabius_step(i, f_);
  }
}

void DyadicTable::grow_d_even(long count) {
  while (static_cast<long>(d_even_.size()) < count) {
    const long i = 2 * static_cast<long>(d_even_.size());
    d_even_.push_back(d_alternating_step(i, d_even_));
  }
}

void DyadicTable::grow_d_odd(long count) {
  grow_d_even(count + 1);
  while (static_cast<long>(d_odd_.size()) < count) {
    const long i = 2 * static_cast<long>(d_odd_.size()) + 1;
    d_odd_.push_back(d_alternating_step(i, d_even_));
  }
}

void DyadicTable::grow_d_from_f(long count) {
  grow_f(count);
  while (static_cast<long>(d_from_f_.size()) < count) {
    const long i = static_cast<long>(d_from_f_.size());
    d_from_f_.push_back(d_from_f_value(i, f_[static_cast<std::size_t>(i) + 1]));
  }
}

void DyadicTable::grow_d_theorem(long count) {
  while (static_cast<long>(d_theorem_.size()) < count) {
    const long i = 2 * static_cast<long>(d_theorem_.size()) + 1;
    d_theorem_.push_back(theorem_d_odd(i, d_theorem_));
  }
}

void DyadicTable::grow_mu(long count) {
  grow_d_even((count + 1) / 2);
  grow_d_odd(count / 2);
  while (static_cast<long>(mu_.size()) < count) {
    const long n = static_cast<long>(mu_.size());
    const Rational& d = n % 2 == 0 ? d_even_[static_cast<std::size_t>(n / 2)]
                                   : d_odd_[static_cast<std::size_t>(n / 2)];
    mu_.push_back(Rational(1, n + 1) - d);
  }
}

const Rational* DyadicTable::find(TableKind kind, long index) const {
  auto pick = [](const std::vector<Rational>& v, long t) -> const Rational* {
    return t >= 0 && static_cast<std::size_t>(t) < v.size() ? &v[static_cast<std::size_t>(t)]
                                                            : nullptr;
  };
  if (index < 0) return nullptr;
  switch (kind) {
    case TableKind::f: return pick(f_, index);
    case TableKind::d_alternating:
      return index % 2 == 0 ? pick(d_even_, index / 2) : pick(d_odd_, index / 2);
    case TableKind::d_from_f: return pick(d_from_f_, index);
    case TableKind::d_theorem: return index % 2 == 1 ? pick(d_theorem_, index / 2) : nullptr;
    case TableKind::mu: return pick(mu_, index);
  }
  return nullptr;
}

Rational DyadicTable::f(long k) {
  require_index(k >= 0, "DyadicTable::f", k);
  {
    std::shared_lock lock(mutex_);
    if (const auto* v = find(TableKind::f, k)) return *v;
  }
  std::unique_lock lock(mutex_);
  grow_f(k);
  return f_[static_cast<std::size_t>(k)];
}

Rational DyadicTable::d(long i, DRoute route) {
  require_index(i >= 0, "DyadicTable::d", i);
  const TableKind kind = route == DRoute::alternating ? TableKind::d_alternating : TableKind::d_from_f;
  {
    std::shared_lock lock(mutex_);
    if (const auto* v = find(kind, i)) return *v;
  }
  std::unique_lock lock(mutex_);
  if (route == DRoute::from_f) {
    grow_d_from_f(i + 1);
  } else if (i % 2 == 0) {
    grow_d_even(i / 2 + 1);
  } else {
    grow_d_odd(i / 2 + 1);
  }
  return *find(kind, i);
}

Rational DyadicTable::d_theorem(long i) {
  if (i < 1 || i % 2 == 0) {
    throw std::invalid_argument("theorem_d_odd: index must be odd and positive, got " +
                                std::to_string(i));
  }
  {
    std::shared_lock lock(mutex_);
    if (const auto* v = find(TableKind::d_theorem, i)) return *v;
  }
  std::unique_lock lock(mutex_);
  grow_d_theorem(i / 2 + 1);
  return d_theorem_[static_cast<std::size_t>(i / 2)];
}

Rational DyadicTable::mu(long n) {
  require_index(n >= 0, "DyadicTable::mu", n);
  {
    std::shared_lock lock(mutex_);
    if (const auto* v = find(TableKind::mu, n)) return *v;
  }
  std::unique_lock lock(mutex_);
  grow_mu(n + 1);
  return mu_[static_cast<std::size_t>(n)];
}

std::vector<TableEntry> DyadicTable::entries(TableKind kind, long max_index) {
  std::vector<TableEntry> out;
  if (max_index < 0) return out;
  switch (kind) {
    case TableKind::f:
      for (long k = 0; k <= max_index; ++k) out.push_back({k, f(k), Route::alternating});
      break;
    case TableKind::d_alternating:
      for (long i = 0; i <= max_index; ++i) out.push_back({i, d(i), Route::alternating});
      break;
    case TableKind::d_from_f:
      for (long i = 0; i <= max_index; ++i) out.push_back({i, d(i, DRoute::from_f), Route::from_f});
      break;
    case TableKind::d_theorem:
      for (long i = 1; i <= max_index; i += 2) out.push_back({i, d_theorem(i), Route::theorem});
      break;
    case TableKind::mu:
      for (long n = 0; n <= max_index; ++n) out.push_back({n, mu(n), Route::alternating});
      break;
  }
  return out;
}

std::optional<Rational> DyadicTable::stored(TableKind kind, long index) const {
  std::shared_lock lock(mutex_);
  if (const auto* v = find(kind, index)) return *v;
  return std::nullopt;
}

void DyadicTable::overwrite(TableKind kind, long index, const Rational& value) {
  if (value.sign() <= 0) throw std::invalid_argument("DyadicTable::overwrite: values must be positive");
  std::unique_lock lock(mutex_);
  auto* slot = const_cast<Rational*>(find(kind, index));
  if (slot == nullptr) {
    throw std::out_of_range("DyadicTable::overwrite: entry " + std::to_string(index) +
                            " is not materialized");
  }
  *slot = value;
}

DyadicTable& shared_table() {
  static DyadicTable table;
  return table;
}

}  // namespace fabius
