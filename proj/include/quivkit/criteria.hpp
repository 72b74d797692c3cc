#pragma once

#include "quivkit/adhm_p2.hpp"
#include "quivkit/flag.hpp"
#include "quivkit/stability.hpp"

namespace quivkit {

template <Field F>
CriterionSet<F> standard_criteria() {
  return {p2_criterion<F>(), flag_criterion<F>()};
}

}  // namespace quivkit
