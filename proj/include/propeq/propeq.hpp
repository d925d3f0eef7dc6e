#pragma once

#include "propeq/abelian.hpp"
#include "propeq/ahss.hpp"
#include "propeq/axioms.hpp"
#include "propeq/builtin_functors.hpp"
#include "propeq/burnside.hpp"
#include "propeq/error.hpp"
#include "propeq/gcw.hpp"
#include "propeq/group.hpp"
#include "propeq/laurent.hpp"
#include "propeq/linalg.hpp"
#include "propeq/mackey_functor.hpp"
#include "propeq/matrix.hpp"
#include "propeq/rational_mackey.hpp"
#include "propeq/smith.hpp"
#include "propeq/span.hpp"
#include "propeq/subgroup.hpp"
