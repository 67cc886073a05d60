#include "dyck/graph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <unordered_map>

namespace dyck {

namespace {

int weight_of(const std::string &bits) {
  int ones = 0;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw error(errc::not_dyck,
                  std::string("unexpected character '") + c + "'");
    ones += (c == '1');
  }
  return ones;
}

int normalize_shift(int t, int n) { return ((t % n) + n) % n; }

// canonical anchored word for each class rank, usable down to k=1
std::string class_word(long long m, int k) {
  if (k == 1) {
    if (m != 0)
      throw error(errc::rank_out_of_range, std::to_string(m) + " not in [0,1[");
    return nest_to_word(root_nest(1)).bits;
  }
  return nest_to_word(nest_for_germ(unrank(m, k))).bits;
}

const std::unordered_map<std::string, long long> &word_rank_table(int k) {
  if (k < 1) throw error(errc::k_too_small, "order must be at least 1");
  if (int cap = effective_ceiling(12); k > cap)
    throw error(errc::too_large, "class lookup capped at k=" +
                                     std::to_string(cap) +
                                     " (set DYCK_MAX_K to change)");
  static std::mutex lock;
  static std::map<int, std::unordered_map<std::string, long long>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::unordered_map<std::string, long long> table;
  if (k == 1) {
    table.emplace(class_word(0, 1), 0);
  } else {
    const auto &germs = enumerate_germs(k);
    table.reserve(germs.size());
    for (long long m = 0; m < static_cast<long long>(germs.size()); ++m)
      table.emplace(nest_to_word(nest_for_germ(germs[m])).bits, m);
  }
  return cache.emplace(k, std::move(table)).first->second;
}

} // namespace

int order_of_bits(const std::string &bits) {
  if (bits.empty() || bits.size() % 2 == 0)
    throw error(errc::wrong_length,
                "length must be odd, got " + std::to_string(bits.size()));
  int k = static_cast<int>(bits.size()) / 2;
  int w = weight_of(bits);
  if (w != k && w != k + 1)
    throw error(errc::out_of_bounds, "weight " + std::to_string(w) +
                                         " matches neither level of order " +
                                         std::to_string(k));
  return k;
}

std::string translate(const std::string &bits, int t) {
  int n = static_cast<int>(bits.size());
  t = normalize_shift(t, n);
  std::string out(n, '0');
  for (int p = 0; p < n; ++p) out[p] = bits[(p - t + n) % n];
  return out;
}

std::string untranslate(const std::string &bits, int t) {
  int n = static_cast<int>(bits.size());
  return translate(bits, n - normalize_shift(t, n));
}

std::string aleph(const std::string &bits) {
  std::string out(bits.rbegin(), bits.rend());
  for (char &c : out) c = (c == '0') ? '1' : '0';
  return out;
}

std::string theta(const std::string &bits) {
  int k = order_of_bits(bits);
  return weight_of(bits) == k ? bits : aleph(bits);
}

cyclic_class_info cyclic_class(const std::string &bits) {
  int k = order_of_bits(bits);
  int n = static_cast<int>(bits.size());
  if (weight_of(bits) != k)
    throw error(errc::out_of_bounds,
                "rotation classes are formed on the lower level");
  cyclic_class_info out;
  int hits = 0;
  for (int t = 0; t < n; ++t) {
    std::string candidate = untranslate(bits, t);
    if (is_anchored_bits(candidate)) {
      out.canonical = candidate;
      out.t = t;
      ++hits;
    }
  }
  if (hits != 1)
    throw error(errc::no_dyck_rotation,
                std::to_string(hits) + " rotations pass the prefix test");
  out.members.reserve(n);
  for (int s = 0; s < n; ++s) out.members.push_back(translate(out.canonical, s));
  return out;
}

std::vector<std::string> dihedral_class(const std::string &bits) {
  order_of_bits(bits); // validates
  int n = static_cast<int>(bits.size());
  std::vector<std::string> out;
  out.reserve(2 * n);
  for (int s = 0; s < n; ++s) out.push_back(translate(bits, s));
  std::string mirror = aleph(bits);
  for (int s = 0; s < n; ++s) out.push_back(translate(mirror, s));
  return out;
}

provenance locate(const std::string &bits) {
  int k = order_of_bits(bits);
  int n = static_cast<int>(bits.size());
  if (weight_of(bits) == k) {
    cyclic_class_info info = cyclic_class(bits);
    const auto &table = word_rank_table(k);
    auto it = table.find(info.canonical);
    assert(it != table.end());
    return provenance{it->second, info.t, false};
  }
  provenance below = locate(aleph(bits));
  return provenance{below.class_rank, (n - below.t) % n, true};
}

int p_location(const std::string &bits, int color) {
  int k = order_of_bits(bits);
  int n = static_cast<int>(bits.size());
  if (color < 0 || color > k)
    throw error(errc::color_out_of_range,
                "color " + std::to_string(color) + " not in [0," +
                    std::to_string(k) + "]");
  if (weight_of(bits) != k)
    throw error(errc::out_of_bounds, "positions are read on the lower level");
  provenance prov = locate(bits);
  dyck_nest nest = word_to_nest(anchored_word{k, class_word(prov.class_rank, k)});
  for (int p = 0; p < n; ++p)
    if (bits[p] == '0' && nest.values[(p - prov.t + n) % n] == color) return p;
  throw error(errc::out_of_bounds,
              "no open position carries color " + std::to_string(color));
}

std::pair<std::string, provenance> modular_arc(const std::string &bits,
                                               int color) {
  int k = order_of_bits(bits);
  int n = static_cast<int>(bits.size());
  if (color < 0 || color > k)
    throw error(errc::color_out_of_range,
                "color " + std::to_string(color) + " not in [0," +
                    std::to_string(k) + "]");
  int p = p_location(bits, color);
  std::pair<std::string, provenance> out;
  int matches = 0;
  for (int z = 0; z < n; ++z) {
    if (bits[z] != '0') continue;
    // the neighbor skipping z: ones exactly at the other open positions
    std::string v(n, '0');
    for (int q = 0; q < n; ++q)
      if (bits[q] == '0' && q != z) v[q] = '1';
    if (v[p] != '0') continue;
    provenance prov = locate(v);
    dyck_nest nest =
        word_to_nest(anchored_word{k, class_word(prov.class_rank, k)});
    if (nest.values[(p - prov.t + n) % n] != k - color) continue;
    out = {v, prov};
    ++matches;
  }
  if (matches != 1)
    throw error(errc::out_of_bounds, std::to_string(matches) +
                                         " neighbors answer color " +
                                         std::to_string(color));
  assert(out.first[p] == '0'); // the skipped position is the colored one
  return out;
}

lexical_edge_pair lexical_edges(const std::string &bits, int color) {
  int k = order_of_bits(bits);
  if (color < 0 || color > k)
    throw error(errc::color_out_of_range,
                "color " + std::to_string(color) + " not in [0," +
                    std::to_string(k) + "]");
  int p = p_location(bits, color);
  lexical_edge_pair out;
  out.v = bits;
  out.v[p] = '1';
  out.w = aleph(out.v);
  out.aleph_u = aleph(bits);
  return out;
}

std::string retrieve(long long m, int t, int k, bool middle, bool upper) {
  if (upper && !middle)
    throw error(errc::out_of_bounds,
                "the single-level graph has no upper variant");
  std::string w = class_word(m, k);
  if (middle && upper) w = aleph(w);
  return translate(w, t);
}

} // namespace dyck
