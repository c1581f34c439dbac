#pragma once

#include "analysis.hpp"
#include "check.hpp"
#include "document.hpp"
#include "element_set.hpp"
#include "error.hpp"
#include "fixtures.hpp"
#include "generate.hpp"
#include "lattice.hpp"
#include "ortho.hpp"
#include "poset.hpp"
#include "pseudo.hpp"
#include "report.hpp"
#include "structure.hpp"
