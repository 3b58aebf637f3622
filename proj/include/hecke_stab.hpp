#pragma once

#include "hecke_stab/error.hpp"
#include "hecke_stab/poly.hpp"
#include "hecke_stab/scalar.hpp"
#include "hecke_stab/matrix.hpp"
#include "hecke_stab/linalg.hpp"
#include "hecke_stab/permutation.hpp"
#include "hecke_stab/partitions.hpp"
#include "hecke_stab/cosets.hpp"
#include "hecke_stab/hecke.hpp"
#include "hecke_stab/module.hpp"
#include "hecke_stab/specht.hpp"
#include "hecke_stab/sequence.hpp"
#include "hecke_stab/serialize.hpp"
#include "hecke_stab/verify.hpp"
