#pragma once

#include "mvmr/types.hpp"

namespace mvmr {

// True SNP-exposure effects, exposure SEs and outcome SEs for the
// summary-data simulation (145 SNPs, 3 exposures). See tools/make_template.py.
struct TemplateTable {
  Matrix gammas;
  Matrix se_x;
  Vector se_y;
};

TemplateTable embedded_template();

}  // namespace mvmr
