#pragma once

#include "pairspec/error.hpp"
#include "pairspec/structure.hpp"
#include "pairspec/pair.hpp"
#include "pairspec/negation.hpp"
#include "pairspec/classify.hpp"
#include "pairspec/hyper.hpp"
#include "pairspec/twist.hpp"
#include "pairspec/congruence.hpp"
#include "pairspec/constructions.hpp"
#include "pairspec/spectrum.hpp"
#include "pairspec/verify.hpp"
#include "pairspec/io.hpp"
#include "pairspec/catalog.hpp"
