package shop.service;

import shop.model.Cart;
import shop.model.Item;

public class Checkout {
  private final Cart cart = new Cart();
  private int paid;

  public int checkout(Item first, Item second) {
    cart.add(first);
    cart.add(second);
    cart.applyDiscount(first.getPrice() / 10);
    System.out.println(second.getName());
    paid = cart.totalWithTax(20);
    return paid;
  }

  static int twice(Checkout c, Item item) {
    return c.checkout(item, item);
  }
}

class Quote {
  private final Cart draft = new Cart();

  int estimate(Item first, Item second) {
    draft.add(first);
    draft.add(second);
    draft.applyDiscount(second.getPrice() / 10);
    System.out.println(first.getName());
    return draft.totalWithTax(20);
  }
}
