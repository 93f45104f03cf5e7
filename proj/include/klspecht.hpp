#pragma once

#include "klspecht/error.hpp"
#include "klspecht/laurent.hpp"
#include "klspecht/coxeter.hpp"
#include "klspecht/hecke.hpp"
#include "klspecht/kl.hpp"
#include "klspecht/linalg.hpp"
#include "klspecht/parabolic.hpp"
#include "klspecht/cellular.hpp"
#include "klspecht/specht.hpp"
#include "klspecht/wgraph.hpp"
#include "klspecht/typea.hpp"
#include "klspecht/verify.hpp"
#include "klspecht/io.hpp"
