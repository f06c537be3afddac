#include <sommerfeld/elements.hpp>

#include <array>

#include <sommerfeld/errors.hpp>
#include <sommerfeld/model.hpp>

namespace sommerfeld {

namespace {

using namespace std::string_view_literals;

constexpr std::array kCmAliases{"Cu"sv};
constexpr std::array kUbnAliases{"Ube"sv};
constexpr std::array kUbsAliases{"Ubh"sv};
constexpr std::array kUboAliases{"Unbiocitium"sv};

constexpr ElementInfo make(int z, std::string_view symbol, std::string_view name,
                           std::span<const std::string_view> aliases = {},
                           std::string_view informal = {}) {
  return ElementInfo{z, symbol, name, z >= 119, informal, aliases};
}

constexpr std::array<ElementInfo, 46> kRegistry{{
    make(92, "U", "Uranium"),
    make(93, "Np", "Neptunium"),
    make(94, "Pu", "Plutonium"),
    make(95, "Am", "Americium"),
    make(96, "Cm", "Curium", kCmAliases),
    make(97, "Bk", "Berkelium"),
    make(98, "Cf", "Californium"),
    make(99, "Es", "Einsteinium"),
    make(100, "Fm", "Fermium"),
    make(101, "Md", "Mendelevium"),
    make(102, "No", "Nobelium"),
    make(103, "Lr", "Lawrencium"),
    make(104, "Rf", "Rutherfordium"),
    make(105, "Db", "Dubnium"),
    make(106, "Sg", "Seaborgium"),
    make(107, "Bh", "Bohrium"),
    make(108, "Hs", "Hassium"),
    make(109, "Mt", "Meitnerium"),
    make(110, "Ds", "Darmstadtium"),
    make(111, "Rg", "Roentgenium"),
    make(112, "Cn", "Copernicium"),
    make(113, "Nh", "Nihonium"),
    make(114, "Fl", "Flerovium"),
    make(115, "Mc", "Moscovium"),
    make(116, "Lv", "Livermorium"),
    make(117, "Ts", "Tennessine"),
    make(118, "Og", "Oganesson"),
    make(119, "Uue", "Ununennium"),
    make(120, "Ubn", "Unbinilium", kUbnAliases),
    make(121, "Ubu", "Unbiunium"),
    make(122, "Ubb", "Unbibium"),
    make(123, "Ubt", "Unbitrium"),
    make(124, "Ubq", "Unbiquadium"),
    make(125, "Ubp", "Unbipentium"),
    make(126, "Ubh", "Unbihexium"),
    make(127, "Ubs", "Unbiseptium", kUbsAliases),
    make(128, "Ubo", "Unbioctium", kUboAliases),
    make(129, "Ube", "Unbiennium"),
    make(130, "Utn", "Untrinilium"),
    make(131, "Utu", "Untriunium"),
    make(132, "Utb", "Untribium"),
    make(133, "Utt", "Untritrium"),
    make(134, "Utq", "Untriquadium"),
    make(135, "Utp", "Untripentium"),
    make(136, "Uth", "Untrihexium"),
    make(137, "Uts", "Untriseptium", {}, "Feynmanium"),
}};

constexpr std::array<FieldStrengthClass, 5> kTiers{{
    {FieldStrength::Strong, "Strong", "no loops", 92, 116},
    {FieldStrength::SuperStrong, "Super-Strong", "one loop, double necklace", 117, 125},
    {FieldStrength::UltraStrong, "Ultra-Strong", "two loops, triple necklace", 126, 128},
    {FieldStrength::SuperUltraStrong, "Super-Ultra Strong", "three loops", 129, 130},
    {FieldStrength::UltraUltraStrong, "Ultra-Ultra Strong", "many loops", 131, 137},
}};

void check_registry_range(int z) {
  if (z < kFirstTransuranic || z > kLastTransuranic) {
    throw NotFoundError("no transuranium entry for Z=" + std::to_string(z) +
                        " (registry covers 92..137)");
  }
}

bool tier_accepts(FieldStrength tier, int winding) {
  switch (tier) {
    case FieldStrength::Strong: return winding <= 1;
    case FieldStrength::SuperStrong: return winding == 2;
    case FieldStrength::UltraStrong: return winding == 3;
    case FieldStrength::SuperUltraStrong: return winding == 4;
    case FieldStrength::UltraUltraStrong: return winding >= 5;
  }
  return false;
}

}  // namespace

std::string ElementInfo::ion_label() const {
  return std::string(symbol) + "^{" + std::to_string(z - 1) + "+}";
}

std::string FieldStrengthClass::display() const {
  return std::string(label) + " (" + std::string(description) + ")";
}

std::span<const ElementInfo> element_registry() { return kRegistry; }

const ElementInfo& element_info(int z) {
  check_registry_range(z);
  return kRegistry[static_cast<std::size_t>(z - kFirstTransuranic)];
}

std::span<const FieldStrengthClass> field_strength_tiers() { return kTiers; }

const FieldStrengthClass& classify(int z) {
  check_registry_range(z);
  for (const auto& tier : kTiers) {
    if (z >= tier.z_min && z <= tier.z_max) return tier;
  }
  throw NotFoundError("no field-strength tier for Z=" + std::to_string(z));
}

std::vector<TierMismatch> tier_winding_mismatches() {
  std::vector<TierMismatch> out;
  for (int z = kFirstTransuranic; z <= kLastTransuranic; ++z) {
    const auto params = orbit_parameters(IonSpec{z, {1, 1}});
    const auto tier = classify(z).tier;
    if (!tier_accepts(tier, params.winding)) {
      out.push_back({z, tier, params.winding_raw, params.winding});
    }
  }
  return out;
}

}  // namespace sommerfeld
