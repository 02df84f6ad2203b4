#pragma once

/**
 * @file lattice_cache.hpp
 * @brief Memoised ideal lattices, optionally persisted to a directory.
 *
 * Files are named by the ring fingerprint (a digest of the operation
 * tables). On every disk load one entry, chosen pseudo-randomly, is
 * re-verified to be an ideal; a failure discards the file and recomputes.
 */

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "amalgam/lattice.hpp"

namespace amalgam {

inline constexpr const char* kCacheDirVariable = "AMALGAM_CACHE_DIR";

class LatticeStore {
 public:
  struct Stats {
    std::size_t memory_hits = 0;
    std::size_t disk_hits = 0;
    std::size_t computed = 0;
    std::size_t corrupt_files = 0;
  };

  /// Memory-only store.
  LatticeStore() = default;

  /// Store backed by a cache directory (created on first write).
  explicit LatticeStore(std::filesystem::path dir, std::uint64_t seed = 0) : dir_(std::move(dir)), seed_(seed) {}

  /// AMALGAM_CACHE_DIR, else $XDG_CACHE_HOME/amalgam, else ~/.cache/amalgam.
  static std::optional<std::filesystem::path> default_directory() {
    if (const char* v = std::getenv(kCacheDirVariable); v && *v) return std::filesystem::path(v);
    if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return std::filesystem::path(v) / "amalgam";
    if (const char* v = std::getenv("HOME"); v && *v) return std::filesystem::path(v) / ".cache" / "amalgam";
    return std::nullopt;
  }

  static std::string file_name(const FiniteRing& r) {
    std::ostringstream os;
    os << std::hex << r.fingerprint() << ".json";
    return os.str();
  }

  const std::vector<Ideal>& ideals(const FiniteRing& r, std::size_t cap = kDefaultCap) {
    std::lock_guard lock(mutex_);
    const auto key = r.fingerprint();
    if (auto it = memo_.find(key); it != memo_.end() && it->second.ring == r) {
      ++stats_.memory_hits;
      return it->second.ideals;
    }
    std::vector<Ideal> ideals;
    if (auto loaded = load(r)) {
      ++stats_.disk_hits;
      ideals = std::move(*loaded);
    } else {
      ideals = all_ideals(r, cap);
      ++stats_.computed;
      save(r, ideals);
    }
    auto& slot = memo_.insert_or_assign(key, Entry{r, std::move(ideals)}).first->second;
    return slot.ideals;
  }

  IdealLattice lattice(const FiniteRing& r, std::size_t cap = kDefaultCap) { return IdealLattice(r, ideals(r, cap)); }

  Stats stats() const {
    std::lock_guard lock(mutex_);
    return stats_;
  }

  const std::optional<std::filesystem::path>& directory() const noexcept { return dir_; }

 private:
  struct Entry {
    FiniteRing ring;
    std::vector<Ideal> ideals;
  };

  std::optional<std::vector<Ideal>> load(const FiniteRing& r) {
    if (!dir_) return std::nullopt;
    const auto path = *dir_ / file_name(r);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
      const auto doc = nlohmann::json::parse(in);
      if (doc.at("format").get<int>() != 1 || doc.at("order").get<std::size_t>() != r.order() ||
          doc.at("fingerprint").get<std::string>() != file_name(r).substr(0, file_name(r).size() - 5)) {
        throw error("header mismatch");
      }
      const auto& entries = doc.at("ideals");
      if (!entries.is_array() || entries.empty()) throw error("no entries");
      std::vector<ElementSet> sets;
      for (const auto& e : entries) {
        ElementSet s(r.order());
        for (const auto& x : e) {
          const auto v = x.get<std::size_t>();
          if (v >= r.order()) throw error("element out of range");
          s.set(v);
        }
        sets.push_back(std::move(s));
      }
      std::mt19937_64 rng(seed_ ^ r.fingerprint());
      std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
      const auto probe = pick(rng);
      if (!is_ideal_set(r, sets[probe])) throw error("entry is not an ideal");
      if (!sets.front().test(r.zero()) || sets.front().count() != 1 || !sets.back().all()) throw error("lattice bounds");
      std::vector<Ideal> out;
      out.reserve(sets.size());
      for (auto& s : sets) {
        auto gens = reduce_generators(r, s);
        out.emplace_back(r, std::move(gens), std::move(s));
      }
      return out;
    } catch (const std::exception&) {
      ++stats_.corrupt_files;
      std::error_code ec;
      std::filesystem::remove(path, ec);
      return std::nullopt;
    }
  }

  void save(const FiniteRing& r, const std::vector<Ideal>& ideals) const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    if (ec) return;
    nlohmann::json doc;
    doc["format"] = 1;
    doc["order"] = r.order();
    const auto name = file_name(r);
    doc["fingerprint"] = name.substr(0, name.size() - 5);
    doc["label"] = r.label();
    auto& entries = doc["ideals"] = nlohmann::json::array();
    for (const auto& i : ideals) entries.push_back(i.elements());
    const auto tmp = *dir_ / (name + ".tmp");
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << doc.dump();
    }
    std::filesystem::rename(tmp, *dir_ / name, ec);
  }

  std::optional<std::filesystem::path> dir_;
  std::uint64_t seed_ = 0;
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, Entry> memo_;
  Stats stats_;
};

}  // namespace amalgam
