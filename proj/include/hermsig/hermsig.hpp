#ifndef HERMSIG_HERMSIG_HPP
#define HERMSIG_HERMSIG_HPP

#include "certificate.hpp"
#include "constructions/examples.hpp"
#include "constructions/factorizations.hpp"
#include "constructions/lattice.hpp"
#include "expression.hpp"
#include "gcd.hpp"
#include "herm_poly.hpp"
#include "hermitian_form.hpp"
#include "interval.hpp"
#include "poly.hpp"
#include "quotient.hpp"
#include "scalar.hpp"
#include "suites.hpp"

#endif
