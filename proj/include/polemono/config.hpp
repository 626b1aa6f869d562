#pragma once

#include <string>

#include "polemono/errors.hpp"
#include "polemono/rank.hpp"

namespace polemono {

enum class Mode { kAuto, kFirstCycleOnly, kFull };

inline const char* mode_name(Mode m) {
  switch (m) {
    case Mode::kAuto: return "auto";
    case Mode::kFirstCycleOnly: return "first-cycle-only";
    case Mode::kFull: return "full";
  }
  return "?";
}

inline Mode parse_mode(const std::string& s) {
  if (s == "auto") return Mode::kAuto;
  if (s == "first-cycle-only") return Mode::kFirstCycleOnly;
  if (s == "full") return Mode::kFull;
  throw IoError("unknown mode '" + s + "' (expected auto, first-cycle-only or full)");
}

struct RunConfig {
  Mode mode = Mode::kAuto;
  RankPolicy rank;
  int threads = 1;
  bool strict = false;
  std::string dump_dir;  // empty = no matrix dumps
};

}  // namespace polemono
