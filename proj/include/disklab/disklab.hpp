#ifndef DISKLAB_DISKLAB_HPP
#define DISKLAB_DISKLAB_HPP

#include "blaschke.hpp"
#include "compose.hpp"
#include "config.hpp"
#include "core.hpp"
#include "fourier.hpp"
#include "function.hpp"
#include "inner.hpp"
#include "outer.hpp"
#include "preserver.hpp"
#include "roots.hpp"
#include "spaces.hpp"
#include "taylor.hpp"

#endif
