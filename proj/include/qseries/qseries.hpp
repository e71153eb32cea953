#ifndef QSERIES_QSERIES_HPP
#define QSERIES_QSERIES_HPP

#include <qseries/catalog.hpp>
#include <qseries/errors.hpp>
#include <qseries/identities.hpp>
#include <qseries/lambert.hpp>
#include <qseries/naive_oracle.hpp>
#include <qseries/partitions.hpp>
#include <qseries/products.hpp>
#include <qseries/serialize.hpp>
#include <qseries/series.hpp>

#endif
