'use strict';

/**
 * Double-ended queue backed by a growable ring buffer.
 */
class Deque {
  constructor(container = [], bucketSize = 4096) {
    this._first = 0;
    this._last = 0;
    this._length = 0;
    this._bucketSize = bucketSize;
    this._map = [new Array(bucketSize)];
    for (const item of container) {
      this.pushBack(item);
    }
  }

  size() {
    return this._length;
  }

  empty() {
    return this._length === 0;
  }

  front() {
    if (this._length === 0) return undefined;
    return this._map[0][this._first];
  }

  back() {
    if (this._length === 0) return undefined;
    return this._map[0][this._last];
  }

  pushBack(element) {
    if (this._length > 0) {
      this._last = (this._last + 1) % this._bucketSize;
    }
    this._map[0][this._last] = element;
    this._length += 1;
    return this._length;
  }

  pushFront(element) {
    if (this._length > 0) {
      this._first = (this._first - 1 + this._bucketSize) % this._bucketSize;
    }
    this._map[0][this._first] = element;
    this._length += 1;
    return this._length;
  }

  popBack() {
    if (this._length === 0) return undefined;
    const value = this._map[0][this._last];
    this._last = (this._last - 1 + this._bucketSize) % this._bucketSize;
    this._length -= 1;
    return value;
  }

  forEach(callback) {
    for (let i = 0; i < this._length; ++i) {
      callback(this._map[0][(this._first + i) % this._bucketSize], i, this);
    }
  }
}

module.exports = { Deque };
