#include "dyck/signature.hpp"

#include <cassert>
#include <sstream>

namespace dyck {

signature encode(const dyck_nest &nest) {
  int n = nest.n();
  std::vector<int> first(nest.k + 1, -1), last(nest.k + 1, -1);
  for (int p = 0; p < n; ++p) {
    int v = nest.values[p];
    if (first[v] < 0)
      first[v] = p;
    else
      last[v] = p;
  }
  signature out;
  out.k = nest.k;
  out.entries.resize(nest.k - 1);
  for (int j = 1; j <= nest.k - 1; ++j) {
    int d = last[j] - first[j];
    out.entries[nest.k - 1 - j] = d / 2;
#ifndef NDEBUG
    // the halfway floor must agree with a direct count of enclosed pairs
    int pairs = 0;
    for (int v = 1; v <= nest.k; ++v)
      if (v != j && first[v] > first[j] && last[v] < last[j]) ++pairs;
    assert(pairs == d / 2);
#endif
  }
  return out;
}

dyck_nest decode(const signature &sig) {
  int k = sig.k;
  int n = 2 * k + 1;
  if (static_cast<int>(sig.entries.size()) != k - 1)
    throw error(errc::wrong_length,
                "need " + std::to_string(k - 1) + " entries, got " +
                    std::to_string(sig.entries.size()));
  for (int j = 1; j <= k - 1; ++j) {
    int a = sig.at(j);
    if (a < 0 || a > k - j)
      throw error(errc::out_of_bounds,
                  "entry " + std::to_string(a) + " for pair " +
                      std::to_string(j) + " exceeds " + std::to_string(k - j));
  }
  std::vector<int> values(n, -1);
  values[0] = 0;
  auto rightmost_free_at_most = [&](int bound) {
    for (int p = bound; p >= 1; --p)
      if (values[p] < 0) return p;
    return -1;
  };
  int anchor = n - 1;
  for (int j = 1; j <= k; ++j) {
    int a = (j == k) ? 0 : sig.at(j);
    int q = rightmost_free_at_most(anchor);
    int p = (q < 0) ? -1 : q - (2 * a + 1);
    if (q < 0 || p < 1 || values[p] >= 0) {
      // one fresh start from the global right end, then give up
      q = rightmost_free_at_most(n - 1);
      p = (q < 0) ? -1 : q - (2 * a + 1);
      if (q < 0 || p < 1 || values[p] >= 0)
        throw error(errc::unrealizable,
                    "no slot pair for value " + std::to_string(j));
    }
    values[p] = j;
    values[q] = j;
    anchor = rightmost_free_at_most(p - 1);
    if (anchor < 0) anchor = 0; // forces the fresh start for the next value
  }
  dyck_nest out{k, std::move(values)};
  return out;
}

signature apply_update(const signature &sig, int location, int h) {
  if (location < 1 || location > sig.k - 1)
    throw error(errc::out_of_bounds,
                "location " + std::to_string(location) + " not in [1," +
                    std::to_string(sig.k - 1) + "]");
  int value = h >= 0 ? h : h + sig.k;
  if (value < 0 || value > sig.k - location)
    throw error(errc::out_of_bounds,
                "entry " + std::to_string(value) + " for pair " +
                    std::to_string(location) + " exceeds " +
                    std::to_string(sig.k - location));
  signature out = sig;
  out.entries[sig.k - 1 - location] = value;
  return out;
}

update_delta diff(const signature &a, const signature &b) {
  if (a.k != b.k)
    throw error(errc::order_mismatch, "comparing order " + std::to_string(a.k) +
                                          " with " + std::to_string(b.k));
  std::vector<long long> spots;
  for (int j = 1; j <= a.k - 1; ++j)
    if (a.at(j) != b.at(j)) spots.push_back(j);
  if (spots.empty()) throw error(errc::no_difference, "signatures are equal");
  if (spots.size() > 1) {
    std::string msg = "entries differ at locations";
    for (long long j : spots) msg += " " + std::to_string(j);
    throw error(errc::multiple_differences, msg, spots);
  }
  int j = static_cast<int>(spots[0]);
  return update_delta{j, a.at(j), b.at(j)};
}

std::string signature_to_string(const signature &sig) {
  if (sig.k <= 10) {
    std::string s;
    for (int e : sig.entries) s.push_back(static_cast<char>('0' + e));
    return s;
  }
  std::string s;
  for (std::size_t p = 0; p < sig.entries.size(); ++p) {
    if (p > 0) s.push_back(',');
    s += std::to_string(sig.entries[p]);
  }
  return s;
}

signature signature_from_string(const std::string &s, int k) {
  std::vector<int> entries;
  if (s.find(',') != std::string::npos) {
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) entries.push_back(std::stoi(item));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9')
        throw error(errc::out_of_bounds,
                    std::string("unexpected character '") + c + "'");
      entries.push_back(c - '0');
    }
  }
  if (static_cast<int>(entries.size()) != k - 1)
    throw error(errc::wrong_length,
                "need " + std::to_string(k - 1) + " entries, got " +
                    std::to_string(entries.size()));
  return signature{k, std::move(entries)};
}

} // namespace dyck
