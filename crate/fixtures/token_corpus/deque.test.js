const { Deque } = require('../src/deque');
const assert = require('assert');

describe('Deque', function () {
  it('should push elements at both ends', function () {
    const deque = new Deque([1, 2, 3]);
    deque.pushFront(0);
    deque.pushBack(4);
    assert.strictEqual(deque.size(), 5);
    assert.strictEqual(deque.front(), 0);
    assert.strictEqual(deque.back(), 4);
  });

  it('should report emptiness', function () {
    const deque = new Deque();
    assert.ok(deque.empty());
    deque.pushBack('x');
    assert.ok(!deque.empty());
  });

  it('iterates in order with forEach', () => {
    const seen = [];
    new Deque(['a', 'b', 'c']).forEach((value, index) => seen.push(`${index}:${value}`));
    assert.deepStrictEqual(seen, ['0:a', '1:b', '2:c']);
  });
});
