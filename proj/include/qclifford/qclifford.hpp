#ifndef QCLIFFORD_QCLIFFORD_HPP
#define QCLIFFORD_QCLIFFORD_HPP

#include "qclifford/rational.hpp"
#include "qclifford/qcore.hpp"
#include "qclifford/clifford.hpp"
#include "qclifford/polynomial.hpp"
#include "qclifford/operators.hpp"
#include "qclifford/linalg.hpp"
#include "qclifford/fischer.hpp"
#include "qclifford/conjugate.hpp"
#include "qclifford/qcomplex.hpp"
#include "qclifford/io.hpp"

#endif // QCLIFFORD_QCLIFFORD_HPP
