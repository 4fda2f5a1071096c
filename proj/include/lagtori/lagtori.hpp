#pragma once

#include "lagtori/braid.hpp"
#include "lagtori/certify.hpp"
#include "lagtori/errors.hpp"
#include "lagtori/family.hpp"
#include "lagtori/laurent.hpp"
#include "lagtori/polynomial_matrix.hpp"
#include "lagtori/serialization.hpp"
