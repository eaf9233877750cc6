package shop.model;

import java.util.ArrayList;
import java.util.List;

public class Cart {
  private final List<Item> items = new ArrayList<>();
  private int discount;

  public void add(Item item) {
    items.add(item);
  }

  public int total() {
    int sum = 0;
    for (Item item : items) {
      sum = sum + item.getPrice();
    }
    return sum - discount;
  }

  public int totalWithTax(int rate) {
    final int base = total();
    return base + base * rate / 100;
  }

  public void applyDiscount(int amount) {
    discount = amount;
  }
}
