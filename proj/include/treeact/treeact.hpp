#pragma once

#include "treeact/amalgam.hpp"
#include "treeact/birat.hpp"
#include "treeact/bttree.hpp"
#include "treeact/cosettree.hpp"
#include "treeact/errors.hpp"
#include "treeact/family.hpp"
#include "treeact/fp.hpp"
#include "treeact/gf.hpp"
#include "treeact/mat2.hpp"
#include "treeact/parse.hpp"
#include "treeact/poly.hpp"
#include "treeact/polymat.hpp"
#include "treeact/ratfunc.hpp"
#include "treeact/repcheck.hpp"
#include "treeact/surfacerep.hpp"
#include "treeact/valuation.hpp"
#include "treeact/word.hpp"
