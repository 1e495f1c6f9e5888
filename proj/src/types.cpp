#include "assr/types.hpp"

namespace assr {

std::string to_string(Direction d) {
  switch (d) {
    case Direction::Left: return "left";
    case Direction::Center: return "center";
    case Direction::Right: return "right";
  }
  return "?";
}

std::string to_string(StimKind k) {
  switch (k) {
    case StimKind::Sam: return "sam";
    case StimKind::Fam: return "fam";
    case StimKind::Clicks: return "clicks";
    case StimKind::AmFm: return "amfm";
  }
  return "?";
}

Direction direction_from_string(const std::string& s) {
  if (s == "left") return Direction::Left;
  if (s == "center") return Direction::Center;
  if (s == "right") return Direction::Right;
  throw ValidationError("unknown direction '" + s +
                        "' (expected left|center|right)");
}

StimKind stim_kind_from_string(const std::string& s) {
  if (s == "sam") return StimKind::Sam;
  if (s == "fam") return StimKind::Fam;
  if (s == "clicks") return StimKind::Clicks;
  if (s == "amfm") return StimKind::AmFm;
  throw ValidationError("unknown stimulus kind '" + s +
                        "' (expected sam|fam|clicks|amfm)");
}

}  // namespace assr
