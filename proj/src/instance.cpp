#include "subword/instance.hpp"

#include <sstream>

#include "subword/errors.hpp"

namespace subword {

Family InstanceSpec::parse_family(const std::string& text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "I2" || text == "i2") return Family::I2;
  throw ParseError("unknown family '" + text + "' (expected A, B or I2)");
}

CoxeterSystem InstanceSpec::make_system() const {
  switch (family) {
    case Family::A: return CoxeterSystem::type_a(rank);
    case Family::B: return CoxeterSystem::type_b(rank);
    case Family::I2: return CoxeterSystem::dihedral(m);
  }
  throw ParseError("unknown family");
}

GroupElement InstanceSpec::make_pi(const CoxeterSystem& sys) const {
  if (pi_data.has_value() == pi_word.has_value())
    throw ParseError("give the target element either as data (--pi) or as a "
                     "reduced word (--pi-word)");
  if (pi_data) return sys.element_from_data(*pi_data);
  for (int s : pi_word->letters) sys.check_generator(s);
  if (!is_reduced_word(sys, *pi_word)) throw NotReduced();
  return element_of_word(sys, *pi_word);
}

std::string InstanceSpec::flags_string() const {
  std::ostringstream out;
  out << "--family " << family_name(family);
  if (family == Family::I2) out << " --m " << m;
  else out << " --rank " << rank;
  out << " --word " << word.to_string();
  if (pi_data) {
    out << " --pi ";
    for (std::size_t i = 0; i < pi_data->size(); ++i) {
      if (i) out << ',';
      out << (*pi_data)[i];
    }
  } else if (pi_word) {
    out << " --pi-word " << pi_word->to_string();
  }
  return out.str();
}

}  // namespace subword
